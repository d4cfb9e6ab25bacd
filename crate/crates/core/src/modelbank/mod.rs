//! Constructors for the operators of the rational G2/I6 and A2 models, the
//! hidden-algebra generators, parameter maps, and the closed-form spectrum.
//!
//! All constructors return operators with `lambda`, `nu`, `omega` symbolic;
//! substitute afterwards with [`DiffOp::substitute`].

mod a2;
mod appendix;
mod g2;
pub mod generators;

pub use a2::{make_h_a2, make_k_a2, make_x_a2};
pub use g2::{k_g2_blocks, make_h_g2, make_h_g2_static, make_k_g2, make_x_g2};
pub use generators::{make_generator, parse_generator, Family, GeneratorId};

use serde::Serialize;

use crate::diffop2::DiffOp;
use crate::error::Error;
use crate::exactcoeff::{rat, rat_int, Rational};

/// Which coupling gets the `1/3` in the map to `(lambda, nu)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// `lambda = nu~/3`, `nu = mu~ + nu~/3`.
    Branch1,
    /// `lambda = mu~/3`, `nu = nu~ + mu~/3`.
    Branch2,
}

/// Physical parameters: the two coupling exponents and the frequency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub nu_tilde: Rational,
    pub mu_tilde: Rational,
    pub omega: Rational,
    pub branch: Branch,
}

impl ModelParams {
    pub fn new(nu_tilde: Rational, mu_tilde: Rational, omega: Rational, branch: Branch) -> Self {
        ModelParams { nu_tilde, mu_tilde, omega, branch }
    }

    /// `(g_s, g_l) = (nu~(nu~ - 1), mu~(mu~ - 1))`.
    pub fn couplings(&self) -> (Rational, Rational) {
        let one = rat_int(1);
        (
            &self.nu_tilde * (&self.nu_tilde - &one),
            &self.mu_tilde * (&self.mu_tilde - &one),
        )
    }

    /// Both couplings exceed `-1/4`. Note `x(x-1) >= -1/4` always, with
    /// equality only at `x = 1/2`.
    pub fn couplings_admissible(&self) -> bool {
        let (gs, gl) = self.couplings();
        let bound = rat(-1, 4);
        gs > bound && gl > bound
    }
}

/// `(lambda, nu)` for the chosen branch.
pub fn param_map(mp: &ModelParams) -> (Rational, Rational) {
    let third = rat(1, 3);
    let (a, b) = match mp.branch {
        Branch::Branch1 => (&mp.nu_tilde, &mp.mu_tilde),
        Branch::Branch2 => (&mp.mu_tilde, &mp.nu_tilde),
    };
    (a * &third, b + a * &third)
}

/// Ground-state energy `(3/2) omega (1 + 2 nu~ + 2 mu~)`.
pub fn ground_energy(mp: &ModelParams) -> Rational {
    rat(3, 2) * &mp.omega * (rat_int(1) + rat_int(2) * &mp.nu_tilde + rat_int(2) * &mp.mu_tilde)
}

/// Eigenvalue of the algebraic Hamiltonian, `-4 omega (n1 + 3 n2)`.
pub fn eps(n1: u32, n2: u32, omega: &Rational) -> Rational {
    rat_int(-4) * omega * rat_int(n1 as i64 + 3 * n2 as i64)
}

/// Energy `2 omega (n1 + 3 n2) + E0`.
pub fn energy(n1: u32, n2: u32, mp: &ModelParams) -> Rational {
    rat_int(2) * &mp.omega * rat_int(n1 as i64 + 3 * n2 as i64) + ground_energy(mp)
}

/// Registered model names.
pub const MODEL_NAMES: &[&str] = &["h.g2", "x.g2", "k.g2", "h.a2", "x.a2", "k.a2"];

/// Resolves a registry name: one of [`MODEL_NAMES`] or
/// `gen.<family>.<s>.<i>` (generators use the given mark).
pub fn resolve(name: &str, mark: &Rational) -> Result<DiffOp, Error> {
    match name {
        "h.g2" => Ok(make_h_g2()),
        "x.g2" => Ok(make_x_g2()),
        "k.g2" => Ok(make_k_g2()),
        "h.a2" => Ok(make_h_a2()),
        "x.a2" => Ok(make_x_a2()),
        "k.a2" => Ok(make_k_a2()),
        _ => match name.strip_prefix("gen.") {
            Some(spec) => {
                let id = parse_generator(spec, mark.clone())
                    .map_err(|_| Error::UnknownModel(name.to_string()))?;
                Ok(make_generator(&id))
            }
            None => Err(Error::UnknownModel(name.to_string())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(nt: Rational, mt: Rational, branch: Branch) -> ModelParams {
        ModelParams::new(nt, mt, rat_int(1), branch)
    }

    #[test]
    fn parameter_branches() {
        assert_eq!(
            param_map(&mp(rat_int(0), rat_int(0), Branch::Branch1)),
            (rat_int(0), rat_int(0))
        );
        assert_eq!(
            param_map(&mp(rat_int(3), rat_int(1), Branch::Branch1)),
            (rat_int(1), rat_int(2))
        );
        assert_eq!(
            param_map(&mp(rat_int(3), rat_int(1), Branch::Branch2)),
            (rat(1, 3), rat(10, 3))
        );
    }

    #[test]
    fn spectrum_formulae() {
        let p = ModelParams::new(rat(1, 2), rat(3, 4), rat(2, 1), Branch::Branch1);
        let e0 = ground_energy(&p);
        assert_eq!(e0, rat(3, 2) * rat_int(2) * (rat_int(1) + rat_int(1) + rat(3, 2)));
        assert_eq!(energy(0, 0, &p), e0);
        assert_eq!(eps(1, 0, &rat_int(1)), rat_int(-4));
        assert_eq!(energy(3, 0, &p), energy(0, 1, &p));
        // E = -eps/2 + E0
        assert_eq!(energy(2, 1, &p), -eps(2, 1, &p.omega) / rat_int(2) + &e0);
    }

    #[test]
    fn coupling_admissibility() {
        assert!(mp(rat_int(2), rat_int(0), Branch::Branch1).couplings_admissible());
        assert!(!mp(rat(1, 2), rat_int(2), Branch::Branch1).couplings_admissible());
        assert_eq!(mp(rat_int(3), rat_int(2), Branch::Branch1).couplings(), (rat_int(6), rat_int(2)));
    }

    #[test]
    fn registry() {
        for name in MODEL_NAMES {
            assert!(!resolve(name, &rat_int(0)).unwrap().is_zero());
        }
        assert!(resolve("gen.R.3.2", &rat_int(0)).is_ok());
        assert!(resolve("gen.R.3.4", &rat_int(0)).is_err());
        assert!(matches!(resolve("h.b3", &rat_int(0)), Err(Error::UnknownModel(_))));
    }
}
