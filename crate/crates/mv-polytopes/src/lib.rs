//! Exact-integer computations with Mirkovic-Vilonen polytopes presented by
//! Berenstein-Zelevinsky data.
//!
//! A BZ datum assigns an integer M_gamma to every chamber weight
//! gamma = w Lambda_i of a finite root datum. The crate validates such data
//! (edge inequalities and tropical Plucker relations), extracts the GGMS
//! vertices mu_w, converts between Lusztig data, string (Kashiwara) data and
//! the polytope picture, applies the crystal operators and their
//! Kashiwara-involution twists, and implements the Anderson-Mirkovic
//! lowering operator together with the machinery that compares it against
//! the true crystal operator.
//!
//! Everything is plain `i64` arithmetic; there are no floating-point
//! tolerances anywhere.

#![forbid(unsafe_code)]

pub mod am;
pub mod bz;
pub mod crystal;
pub mod error;
pub mod root_datum;
pub mod string_data;
pub mod weyl;

use std::sync::Arc;

pub use error::{Error, Result};
pub use root_datum::{builtin_cartan, CartanMatrix, Classical, Coweight, RootDatum, Weight};
pub use weyl::{Gamma, WeylGroup};

/// A root datum together with its enumerated Weyl group and chamber-weight
/// tables. Shared by reference through `Arc` by everything downstream.
#[derive(Debug)]
pub struct RootSystem {
    pub datum: RootDatum,
    pub weyl: WeylGroup,
    pub gamma: Gamma,
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix, classical: Option<Classical>) -> Result<Arc<Self>> {
        Self::new_capped(cartan, classical, weyl::WEYL_GROUP_CAP)
    }

    pub fn new_capped(
        cartan: CartanMatrix,
        classical: Option<Classical>,
        weyl_cap: usize,
    ) -> Result<Arc<Self>> {
        let datum = RootDatum::new(cartan, classical)?;
        let weyl = WeylGroup::enumerate(&datum, weyl_cap)?;
        let gamma = Gamma::build(&datum, &weyl);
        Ok(Arc::new(Self { datum, weyl, gamma }))
    }

    /// Built-in types: "A1".."A5", "C2", "C3" (case-insensitive).
    pub fn builtin(name: &str) -> Result<Arc<Self>> {
        let (cartan, chart) = builtin_cartan(name)?;
        Self::new(cartan, Some(chart))
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Display name of a chamber weight: pretty name when a classical chart
    /// exists, raw coordinates otherwise.
    pub fn gamma_name(&self, g: usize) -> String {
        let cw = &self.gamma.items[g];
        match self.datum.pretty_weight(&cw.weight) {
            Some(s) => s,
            None => format!(
                "L{}:{}",
                cw.level + 1,
                cw.weight.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_systems() {
        for name in ["A1", "A2", "A3", "A4", "A5", "C2", "C3"] {
            let sys = RootSystem::builtin(name).unwrap();
            assert_eq!(sys.weyl.longest_length(), sys.datum.num_positive_roots());
            assert_eq!(
                sys.gamma.len(),
                (0..sys.rank())
                    .map(|i| {
                        let mut lam = vec![0i64; sys.rank()];
                        lam[i] = 1;
                        let mut orbit = std::collections::HashSet::new();
                        for w in 0..sys.weyl.order() {
                            orbit.insert(sys.weyl.act_weight(w, &lam));
                        }
                        orbit.len()
                    })
                    .sum::<usize>()
            );
        }
        assert!(RootSystem::builtin("G2").is_err());
        assert!(RootSystem::builtin("C4").is_err());
    }
}
