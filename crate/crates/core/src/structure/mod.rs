//! Structure equations of a Lie algebra with a left-invariant complex
//! structure, and the differential they induce on invariant forms.

mod lie;
mod parse;

pub use lie::RealLieAlgebra;
pub use parse::{parse, parse_document, parse_form, parse_metric, LieDocument, MetricSpec};

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{Factor, Form, Monomial};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraFlags {
    pub integrable: bool,
    pub unimodular: bool,
    pub nilpotent: bool,
}

/// `dφ^i` for every generator of the (1,0)-coframe. `dφ̄^i` is always the
/// conjugate of `dφ^i`; it is never supplied separately.
#[derive(Clone, Debug)]
pub struct StructureEquations {
    name: String,
    n: usize,
    dgen: Vec<Form>,
    dgen_conj: Vec<Form>,
    flags: AlgebraFlags,
}

impl StructureEquations {
    /// Validates `d² = 0` on every generator and computes the algebra flags.
    /// `dgen[i]` is `dφ^{i+1}` and must be a 2-form.
    pub fn new(name: impl Into<String>, n: usize, dgen: Vec<Form>) -> Result<Self> {
        assert_eq!(dgen.len(), n, "one differential per generator");
        for (i, f) in dgen.iter().enumerate() {
            if f.n() != n {
                return Err(Error::Dimension { left: n, right: f.n() });
            }
            if !f.is_zero() && f.degree() != Some(2) {
                return Err(Error::Syntax {
                    line: 0,
                    column: 0,
                    message: format!("d f{} must be a 2-form, got {f}", i + 1),
                });
            }
        }
        let dgen_conj = dgen.iter().map(Form::conjugate).collect();
        let mut s = StructureEquations {
            name: name.into(),
            n,
            dgen,
            dgen_conj,
            flags: AlgebraFlags {
                integrable: false,
                unimodular: false,
                nilpotent: false,
            },
        };
        for i in 0..n {
            let dd = s.d_unchecked(&s.dgen[i]);
            if !dd.is_zero() {
                return Err(Error::Jacobi {
                    generator: i + 1,
                    residual: dd.to_string(),
                });
            }
        }
        s.flags = s.compute_flags();
        Ok(s)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `dφ^i` (1-based).
    pub fn dgen(&self, i: usize) -> &Form {
        &self.dgen[i - 1]
    }

    pub fn flags(&self) -> AlgebraFlags {
        self.flags
    }

    pub fn is_integrable(&self) -> bool {
        self.flags.integrable
    }

    fn check(&self, a: &Form) -> Result<()> {
        if a.n() != self.n {
            return Err(Error::Dimension {
                left: self.n,
                right: a.n(),
            });
        }
        Ok(())
    }

    pub fn require_integrable(&self) -> Result<()> {
        match (1..=self.n).find(|&i| !self.dgen(i).project(0, 2).is_zero()) {
            Some(generator) => Err(Error::NotIntegrable { generator }),
            None => Ok(()),
        }
    }

    /// The exterior derivative: the unique antiderivation extending the
    /// generator equations and their conjugates.
    pub fn d(&self, a: &Form) -> Result<Form> {
        self.check(a)?;
        Ok(self.d_unchecked(a))
    }

    pub(crate) fn d_unchecked(&self, a: &Form) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in a.terms() {
            let dm = self.d_monomial(m);
            if !dm.is_zero() {
                out = &out + &dm.scale(c);
            }
        }
        out
    }

    /// `d(x₁∧…∧x_r) = Σ_k (−1)^{k−1} x₁∧…∧dx_k∧…∧x_r`.
    pub(crate) fn d_monomial(&self, m: &Monomial) -> Form {
        let n = self.n;
        let factors = m.factors();
        let mut out = Form::zero(n);
        for (k, x) in factors.iter().enumerate() {
            let dx = match *x {
                Factor::Holo(i) => &self.dgen[i - 1],
                Factor::Anti(i) => &self.dgen_conj[i - 1],
            };
            if dx.is_zero() {
                continue;
            }
            let prefix = Form::from_factors(n, &factors[..k]);
            let suffix = Form::from_factors(n, &factors[k + 1..]);
            let mut term = prefix.wedge_unchecked(dx).wedge_unchecked(&suffix);
            if k % 2 == 1 {
                term = -term;
            }
            out = &out + &term;
        }
        out
    }

    /// `∂`: the component of `d` raising the holomorphic degree by one.
    pub fn del(&self, a: &Form) -> Result<Form> {
        self.check(a)?;
        self.require_integrable()?;
        Ok(self.split_d(a, 1, 0))
    }

    /// `∂̄`: the component of `d` raising the anti-holomorphic degree by one.
    pub fn delbar(&self, a: &Form) -> Result<Form> {
        self.check(a)?;
        self.require_integrable()?;
        Ok(self.split_d(a, 0, 1))
    }

    pub(crate) fn split_d(&self, a: &Form, dp: usize, dq: usize) -> Form {
        let mut out = Form::zero(self.n);
        for (p, q) in a.bidegrees() {
            let part = self.d_unchecked(&a.project(p, q)).project(p + dp, q + dq);
            out = &out + &part;
        }
        out
    }

    pub fn real_algebra(&self) -> RealLieAlgebra {
        RealLieAlgebra::from_structure(self)
    }

    fn compute_flags(&self) -> AlgebraFlags {
        let real = self.real_algebra();
        AlgebraFlags {
            integrable: self.require_integrable().is_ok(),
            unimodular: real.is_unimodular(),
            nilpotent: real.is_nilpotent(),
        }
    }

    /// Normalized `.lie` rendering of the equations (without metric).
    pub fn to_lie(&self) -> String {
        let mut out = format!("algebra {}\ndim {}\n", self.name, self.n);
        for i in 1..=self.n {
            if !self.dgen(i).is_zero() {
                out.push_str(&format!("d f{i} = {}\n", self.dgen(i)));
            }
        }
        out
    }
}

/// `AlgebraFlags` of already validated equations.
pub fn check_flags(s: &StructureEquations) -> AlgebraFlags {
    s.flags()
}

/// Shorthand for a pure coefficient times an ordered product of factors.
pub fn term(n: usize, c: Scalar, factors: &[Factor]) -> Form {
    if c.is_zero() {
        return Form::zero(n);
    }
    Form::from_factors(n, factors).scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exterior::basis;
    use Factor::{Anti, Holo};

    fn sl2c() -> StructureEquations {
        corpus::load("sl2c").unwrap().equations
    }

    #[test]
    fn sl2c_equations() {
        let s = sl2c();
        assert_eq!(s.n(), 3);
        assert_eq!(*s.dgen(1), Form::from_factors(3, &[Holo(2), Holo(3)]));
        assert!(s.is_integrable());
        // d(φ¹²) = 0
        let e12 = Form::from_factors(3, &[Holo(1), Holo(2)]);
        assert!(s.d(&e12).unwrap().is_zero());
        // d(φ^{11̄}) = φ^{23}∧φ̄¹ − φ¹∧conj(φ^{23})
        let expected =
            &Form::from_factors(3, &[Holo(2), Holo(3), Anti(1)]) - &Form::from_factors(3, &[Holo(1), Anti(2), Anti(3)]);
        assert_eq!(s.d(&Form::from_factors(3, &[Holo(1), Anti(1)])).unwrap(), expected);
        assert!(s.delbar(&Form::holo(3, 1)).unwrap().is_zero());
    }

    #[test]
    fn calabi_eckmann_split() {
        let s = corpus::load("calabi-eckmann").unwrap().equations;
        let i = Scalar::i();
        assert_eq!(
            s.del(&Form::holo(3, 1)).unwrap(),
            term(3, i.clone(), &[Holo(1), Holo(3)])
        );
        assert_eq!(s.delbar(&Form::holo(3, 1)).unwrap(), term(3, i, &[Holo(1), Anti(3)]));
    }

    #[test]
    fn kodaira_d() {
        let s = corpus::load("kodaira-secondary").unwrap().equations;
        assert_eq!(
            s.d(&Form::holo(2, 2)).unwrap(),
            term(2, Scalar::from_ratios(0, 1, 1, 2), &[Holo(1), Anti(1)])
        );
    }

    #[test]
    fn d_squared_vanishes_on_all_monomials() {
        for name in corpus::NAMES {
            let s = corpus::load(name).unwrap().equations;
            let n = s.n();
            for p in 0..=n {
                for q in 0..=n {
                    for m in basis(n, p, q) {
                        let f = Form::term(n, m, Scalar::from_int(1));
                        let dd = s.d(&s.d(&f).unwrap()).unwrap();
                        assert!(dd.is_zero(), "{name}: d²({m}) = {dd}");
                    }
                }
            }
        }
    }

    #[test]
    fn d_commutes_with_conjugation() {
        for name in corpus::NAMES {
            let s = corpus::load(name).unwrap().equations;
            let n = s.n();
            for p in 0..=n {
                for q in 0..=n {
                    for m in basis(n, p, q) {
                        let f = Form::term(n, m, Scalar::from_ratios(1, 2, 3, 1));
                        assert_eq!(s.d(&f.conjugate()).unwrap(), s.d(&f).unwrap().conjugate());
                    }
                }
            }
        }
    }

    #[test]
    fn non_integrable_refuses_split() {
        let n = 3;
        let d1 = Form::from_factors(n, &[Anti(2), Anti(3)]);
        let s = StructureEquations::new("x", n, vec![d1, Form::zero(n), Form::zero(n)]).unwrap();
        assert!(!s.is_integrable());
        assert_eq!(
            s.del(&Form::holo(n, 1)).unwrap_err(),
            Error::NotIntegrable { generator: 1 }
        );
        assert!(s.d(&Form::holo(n, 1)).is_ok());
    }

    #[test]
    fn jacobi_violation_reported() {
        // dφ¹ = φ²³, dφ² = φ¹², dφ³ = 0: d²φ¹ = φ¹²³ ≠ 0
        let n = 3;
        let d1 = Form::from_factors(n, &[Holo(2), Holo(3)]);
        let d2 = Form::from_factors(n, &[Holo(1), Holo(2)]);
        let err = StructureEquations::new("bad", n, vec![d1, d2, Form::zero(n)]).unwrap_err();
        assert!(matches!(err, Error::Jacobi { generator: 1, .. }), "{err}");
    }

    #[test]
    fn flags() {
        let s = sl2c();
        assert_eq!(
            check_flags(&s),
            AlgebraFlags {
                integrable: true,
                unimodular: true,
                nilpotent: false
            }
        );
        let k = corpus::load("kodaira-secondary").unwrap().equations;
        assert_eq!(
            k.flags(),
            AlgebraFlags {
                integrable: true,
                unimodular: true,
                nilpotent: false
            }
        );
        for name in ["skt-nilmanifold", "iwasawa"] {
            let s = corpus::load(name).unwrap().equations;
            assert!(s.flags().nilpotent, "{name}");
            assert!(s.flags().unimodular, "{name}");
        }
    }

    #[test]
    fn lie_round_trip() {
        for name in corpus::NAMES {
            let s = corpus::load(name).unwrap().equations;
            let again = parse(&s.to_lie()).unwrap();
            assert_eq!(again.n(), s.n());
            for i in 1..=s.n() {
                assert_eq!(again.dgen(i), s.dgen(i));
            }
        }
    }
}
