//! Invariant suite run by the CLI `verify` command and the acceptance tests.

use std::fmt;

use crate::enumerate::{matrix_tree_count, vol_squared, EdgeCap};
use crate::error::Result;
use crate::mpinv::{
    balanced_unicyclic_pinv, general_pinv, laplacian_pinv, projector, tree_pinv,
    unbalanced_unicyclic_inverse,
};
use crate::ratmat::penrose_verify;
use crate::scalar::Scalar;
use crate::sgraph::SignedGraph;
use crate::{RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "ok" } else { "FAIL" };
        write!(f, "{tag:4} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, outcome: Result<(bool, String)>) -> Check {
    match outcome {
        Ok((passed, detail)) => Check { name, passed, detail },
        Err(e) => Check {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Runs every invariant that applies to `g`. Fails only on inputs the suite
/// cannot handle (disconnected, over the edge cap); each mathematical
/// mismatch is a failed [`Check`].
pub fn verify_graph(g: &SignedGraph, cap: EdgeCap) -> Result<Vec<Check>> {
    g.require_connected()?;
    cap.check(g)?;
    let balanced = g.is_balanced()?;
    let n_mat: RatMatrix = g.incidence();
    let general = general_pinv::<Rational>(g, cap);
    let mut checks = Vec::new();

    checks.push(check(
        "oracle",
        general.clone().map(|r| {
            let oracle = n_mat.pinv_oracle();
            (r.matrix == oracle, format!("{} vs oracle", r.method))
        }),
    ));
    checks.push(check(
        "penrose",
        general.clone().and_then(|r| {
            let flags = penrose_verify(&n_mat, &r.matrix)?;
            Ok((flags.all(), format!("{:?}", flags.as_array())))
        }),
    ));
    checks.push(check(
        "projector",
        projector::<Rational>(g, cap).and_then(|p| {
            let idem = p.multiply(&p)? == p;
            let fixes_n = p.multiply(&n_mat)? == n_mat;
            Ok((idem && fixes_n, "N N† closed form, idempotent, P N = N".to_string()))
        }),
    ));
    checks.push(check(
        "volume",
        vol_squared(g, cap).and_then(|vol2| {
            let det = g.laplacian::<Rational>().det()?;
            if balanced {
                let tau = matrix_tree_count(g)?;
                let ok = det == Rational::from_i128(0) && vol2 == g.n() as u128 * tau;
                Ok((ok, format!("det L = {det}, vol² = {vol2}, n τ = {}", g.n() as u128 * tau)))
            } else {
                let ok = det == Rational::from_i128(vol2 as i128);
                Ok((ok, format!("det L = {det}, vol² = {vol2}")))
            }
        }),
    ));
    let special = if g.is_tree() && g.n() >= 2 {
        Some(tree_pinv::<Rational>(g))
    } else if g.is_unicyclic() {
        Some(if balanced {
            balanced_unicyclic_pinv(g)
        } else {
            unbalanced_unicyclic_inverse(g)
        })
    } else {
        None
    };
    if let Some(special) = special {
        checks.push(check(
            "specialization",
            special.and_then(|s| {
                let r = general.clone()?;
                Ok((s.matrix == r.matrix, format!("{} vs {}", s.method, r.method)))
            }),
        ));
    }
    checks.push(check(
        "laplacian",
        laplacian_pinv::<Rational>(g, cap).map(|r| (r.penrose.all(), format!("{:?}", r.penrose.as_array()))),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_pass() {
        for g in [fixtures::tree7(), fixtures::gamma1(), fixtures::gamma2(), fixtures::gamma3()] {
            let checks = verify_graph(&g, EdgeCap::default()).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn specialization_only_when_applicable() {
        let checks = verify_graph(&fixtures::gamma2(), EdgeCap::default()).unwrap();
        assert!(checks.iter().all(|c| c.name != "specialization"));
        let checks = verify_graph(&fixtures::tree7(), EdgeCap::default()).unwrap();
        assert!(checks.iter().any(|c| c.name == "specialization"));
    }
}
