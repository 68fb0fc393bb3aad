//! Constant Hermitian metrics in the declared coframe and the structures
//! they induce: fundamental form, volume form, pointwise inner product,
//! the anti-linear Hodge star and the formal adjoints `∂*`, `∂̄*`.
//!
//! The metric matrix `h` enters through `ω = (i/2) Σ h_{jk} φ^j ∧ φ̄^k`.
//! The inner product on (1,0)-forms is `⟨φ^j, φ^k⟩ = 2·conj(h⁻¹)_{jk}`, so
//! a unitary coframe has `|φ^j|² = 2` and `⟨vol, vol⟩ = 1`. On `Λ^{p,q}`
//! the Gram entries are products of `p×p` and `q×q` minors.
//!
//! Invariant forms have constant pointwise products and the total volume is
//! normalized to 1, so the L² pairing equals the pointwise one.

use std::sync::{Arc, OnceLock};

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exterior::{basis, Form, Monomial};
use crate::linalg::Matrix;
use crate::scalar::{Rational, Scalar};
use crate::structure::{LieDocument, MetricSpec, StructureEquations};

/// Leading principal minors of a Hermitian matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positivity {
    pub positive: bool,
    pub minors: Vec<Rational>,
}

pub fn check_hermitian(h: &Matrix) -> Result<()> {
    if h.rows() != h.cols() {
        return Err(Error::NotHermitian {
            row: h.rows(),
            col: h.cols(),
        });
    }
    for i in 0..h.rows() {
        for j in i..h.cols() {
            if h[(i, j)] != h[(j, i)].conj() {
                return Err(Error::NotHermitian { row: i + 1, col: j + 1 });
            }
        }
    }
    Ok(())
}

/// Positive definiteness by the leading-minor test.
pub fn positivity_check(h: &Matrix) -> Result<Positivity> {
    check_hermitian(h)?;
    let minors: Vec<Rational> = (1..=h.rows())
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            let det = h.minor(&idx, &idx).determinant();
            debug_assert!(det.is_real());
            det.re().clone()
        })
        .collect();
    Ok(Positivity {
        positive: minors.iter().all(Signed::is_positive),
        minors,
    })
}

#[derive(Debug)]
struct BidegreeTables {
    gram: Matrix,
    star: Matrix,
}

pub struct HermitianMetric {
    n: usize,
    h: Matrix,
    minors: Vec<Rational>,
    gram1: Matrix,
    omega: Form,
    vol: Form,
    vol_coeff: Scalar,
    tables: Vec<OnceLock<Arc<BidegreeTables>>>,
}

impl Clone for HermitianMetric {
    fn clone(&self) -> Self {
        HermitianMetric::new(self.h.clone()).expect("already validated")
    }
}

impl std::fmt::Debug for HermitianMetric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HermitianMetric")
            .field("n", &self.n)
            .field("h", &self.h)
            .finish()
    }
}

impl PartialEq for HermitianMetric {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h
    }
}

impl HermitianMetric {
    pub fn new(h: Matrix) -> Result<Self> {
        let pos = positivity_check(&h)?;
        if let Some(k) = pos.minors.iter().position(|m| !m.is_positive()) {
            return Err(Error::NotPositive {
                index: k + 1,
                minor: pos.minors[k].to_string(),
            });
        }
        let n = h.rows();
        let hinv = h.inverse().expect("positive definite");
        let gram1 = hinv.conj().scale(&Scalar::from_int(2));
        let omega = fundamental_form(&h);
        let vol = volume_form_of(&omega, n);
        let top = Monomial::new(&(1..=n).collect::<Vec<_>>(), &(1..=n).collect::<Vec<_>>()).unwrap();
        let vol_coeff = vol.coeff(&top);
        Ok(HermitianMetric {
            n,
            h,
            minors: pos.minors,
            gram1,
            omega,
            vol,
            vol_coeff,
            tables: (0..(n + 1) * (n + 1)).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        HermitianMetric::new(Matrix::identity(n)).expect("identity is positive")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.h
    }

    pub fn minors(&self) -> &[Rational] {
        &self.minors
    }

    /// `ω = (i/2) Σ h_{jk} φ^j ∧ φ̄^k`.
    pub fn omega(&self) -> &Form {
        &self.omega
    }

    /// `vol = ω^n / n!`.
    pub fn volume_form(&self) -> &Form {
        &self.vol
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

    fn tables(&self, p: usize, q: usize) -> Arc<BidegreeTables> {
        self.tables[p * (self.n + 1) + q]
            .get_or_init(|| Arc::new(self.build_tables(p, q)))
            .clone()
    }

    fn build_tables(&self, p: usize, q: usize) -> BidegreeTables {
        let n = self.n;
        let src = basis(n, p, q);
        let gram = self.build_gram(&src);
        // wedge pairing Λ^{p,q} × Λ^{n-p,n-q} → top monomial
        let dst = basis(n, n - p, n - q);
        let mut pairing = Matrix::zeros(src.len(), dst.len());
        for (i, a) in src.iter().enumerate() {
            for (k, b) in dst.iter().enumerate() {
                if let Some((_, neg)) = a.wedge(b) {
                    pairing[(i, k)] = if neg { -Scalar::one() } else { Scalar::one() };
                }
            }
        }
        // α ∧ *β = ⟨α, β⟩ vol for every basis α: pairing · x = vol_coeff · gram[:, β]
        let inv = pairing.inverse().expect("wedge pairing is perfect");
        let star = (&inv * &gram).scale(&self.vol_coeff);
        BidegreeTables { gram, star }
    }

    fn build_gram(&self, monos: &[Monomial]) -> Matrix {
        let g = &self.gram1;
        let gbar = g.conj();
        let mut out = Matrix::zeros(monos.len(), monos.len());
        for (a, ma) in monos.iter().enumerate() {
            let (ha, aa) = (zero_based(&ma.holo()), zero_based(&ma.anti()));
            for (b, mb) in monos.iter().enumerate() {
                if b < a {
                    out[(a, b)] = out[(b, a)].conj();
                    continue;
                }
                let (hb, ab) = (zero_based(&mb.holo()), zero_based(&mb.anti()));
                let d1 = g.minor(&ha, &hb).determinant();
                if d1.is_zero() {
                    continue;
                }
                let d2 = gbar.minor(&aa, &ab).determinant();
                out[(a, b)] = &d1 * &d2;
            }
        }
        out
    }

    /// Gram matrix of `⟨·,·⟩` on `Λ^{p,q}` in the canonical basis order.
    pub fn gram(&self, p: usize, q: usize) -> Matrix {
        self.tables(p, q).gram.clone()
    }

    /// Matrix `T` with `*β = T · conj(coords(β))` on `Λ^{p,q}`.
    pub fn star_matrix(&self, p: usize, q: usize) -> Matrix {
        self.tables(p, q).star.clone()
    }

    /// Pointwise Hermitian product, linear in the first slot. Components of
    /// different bidegree are orthogonal.
    pub fn inner_product(&self, a: &Form, b: &Form) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        let mut total = Scalar::zero();
        for (p, q) in a.bidegrees() {
            let monos = basis(self.n, p, q);
            let x = a.project(p, q).coords(&monos);
            let y = b.project(p, q).coords(&monos);
            if y.iter().all(Zero::is_zero) {
                continue;
            }
            let t = self.tables(p, q);
            let ybar: Vec<Scalar> = y.iter().map(Scalar::conj).collect();
            let gy = t.gram.mul_vec(&ybar);
            total += x.iter().zip(&gy).map(|(u, v)| u * v).sum::<Scalar>();
        }
        Ok(total)
    }

    /// `⟪a, b⟫ = ∫ ⟨a, b⟩ vol` with total volume 1.
    pub fn l2_pairing(&self, a: &Form, b: &Form) -> Result<Scalar> {
        self.inner_product(a, b)
    }

    /// The complex anti-linear Hodge star `Λ^{p,q} → Λ^{n−p,n−q}`,
    /// applied componentwise.
    pub fn star(&self, a: &Form) -> Result<Form> {
        self.check(a)?;
        let n = self.n;
        let mut out = Form::zero(n);
        for (p, q) in a.bidegrees() {
            let monos = basis(n, p, q);
            let x: Vec<Scalar> = a.project(p, q).coords(&monos).iter().map(Scalar::conj).collect();
            let y = self.tables(p, q).star.mul_vec(&x);
            out = &out + &Form::from_coords(n, &basis(n, n - p, n - q), &y);
        }
        Ok(out)
    }

    /// `∂* = −*∂*`.
    pub fn del_adjoint(&self, a: &Form, s: &StructureEquations) -> Result<Form> {
        let x = self.star(a)?;
        let y = s.del(&x)?;
        Ok(-self.star(&y)?)
    }

    /// `∂̄* = −*∂̄*`.
    pub fn delbar_adjoint(&self, a: &Form, s: &StructureEquations) -> Result<Form> {
        let x = self.star(a)?;
        let y = s.delbar(&x)?;
        Ok(-self.star(&y)?)
    }

    /// `ω^k ∧ a`.
    pub fn lefschetz_power(&self, a: &Form, k: usize) -> Result<Form> {
        self.check(a)?;
        Ok(self.omega.power(k).wedge_unchecked(a))
    }
}

impl MetricSpec {
    pub fn build(&self, n: usize) -> Result<HermitianMetric> {
        match self {
            MetricSpec::Identity => Ok(HermitianMetric::identity(n)),
            MetricSpec::Hermitian(h) if h.rows() != n => Err(Error::Dimension {
                left: n,
                right: h.rows(),
            }),
            MetricSpec::Hermitian(h) => HermitianMetric::new(h.clone()),
        }
    }
}

impl LieDocument {
    /// The declared metric, validated against the coframe size.
    pub fn hermitian_metric(&self) -> Result<Option<HermitianMetric>> {
        self.metric.as_ref().map(|m| m.build(self.equations.n())).transpose()
    }
}

fn zero_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i - 1).collect()
}

pub fn fundamental_form(h: &Matrix) -> Form {
    let n = h.rows();
    let half_i = Scalar::from_ratios(0, 1, 1, 2);
    let mut omega = Form::zero(n);
    for j in 0..n {
        for k in 0..n {
            let c = &h[(j, k)] * &half_i;
            let m = Monomial::new(&[j + 1], &[k + 1]).unwrap();
            omega.add_term(m, c);
        }
    }
    omega
}

fn volume_form_of(omega: &Form, n: usize) -> Form {
    let fact: i64 = (1..=n as i64).product();
    omega
        .power(n)
        .scale(&Scalar::real(Rational::new(1.into(), fact.into())))
}

pub fn volume_form(h: &Matrix) -> Form {
    volume_form_of(&fundamental_form(h), h.rows())
}

/// The constant `c` with `*(ω^{n−p}∧ψ) = c·ψ̄` for every (p,0)-form `ψ`:
/// `(−1)^{p(p+1)/2} (−i)^p (n−p)!`. Its phase is fixed by `β∧*β` being a
/// positive multiple of `vol` and does not depend on `n`.
pub fn lefschetz_star_constant(n: usize, p: usize) -> Scalar {
    let sign = if (p * (p + 1) / 2).is_multiple_of(2) { 1 } else { -1 };
    let fact: i64 = (1..=(n - p) as i64).product();
    (-Scalar::i())
        .pow(p as u32)
        .scale(&Rational::from_integer((sign * fact).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exterior::Factor::{Anti, Holo};
    use crate::scalar::rational;

    fn s(re: i64, im: i64) -> Scalar {
        Scalar::from_ratios(re, 1, im, 1)
    }

    #[test]
    fn positivity_examples() {
        let id = positivity_check(&Matrix::identity(3)).unwrap();
        assert!(id.positive);
        assert_eq!(id.minors, vec![rational(1, 1); 3]);
        let bad = Matrix::from_rows(vec![vec![s(1, 0), s(2, 0)], vec![s(2, 0), s(1, 0)]]);
        let r = positivity_check(&bad).unwrap();
        assert!(!r.positive);
        assert_eq!(r.minors[1], rational(-3, 1));
        let skew = Matrix::from_rows(vec![vec![s(1, 0), s(0, 1)], vec![s(0, 1), s(1, 0)]]);
        assert!(matches!(positivity_check(&skew), Err(Error::NotHermitian { .. })));
        assert!(matches!(
            HermitianMetric::new(bad),
            Err(Error::NotPositive { index: 2, .. })
        ));
    }

    #[test]
    fn positivity_matches_three_parameter_inequalities() {
        // 2ω = i(r²ψ^{11̄}+s²ψ^{22̄}+t²ψ^{33̄}) + uψ^{12̄} − ūψ^{21̄} + vψ^{13̄} − v̄ψ^{31̄} + wψ^{23̄} − w̄ψ^{32̄}
        let (r2, s2, t2) = (rational(3, 1), rational(5, 2), rational(7, 3));
        let (u, v, w) = (
            Scalar::from_ratios(1, 2, -1, 3),
            Scalar::from_ratios(-1, 1, 1, 4),
            Scalar::from_ratios(2, 3, 1, 1),
        );
        let mi = -Scalar::i();
        let h = Matrix::from_rows(vec![
            vec![Scalar::real(r2.clone()), &mi * &u, &mi * &v],
            vec![(&mi * &u).conj(), Scalar::real(s2.clone()), &mi * &w],
            vec![(&mi * &v).conj(), (&mi * &w).conj(), Scalar::real(t2.clone())],
        ]);
        let pos = positivity_check(&h).unwrap();
        assert_eq!(pos.minors[0], r2);
        assert_eq!(pos.minors[1], &r2 * &s2 - u.norm_sqr());
        let iuvw = &(&Scalar::i() * &u) * &(&v.conj() * &w);
        let rhs =
            &r2 * &s2 * &t2 - iuvw.re() * rational(2, 1) - &r2 * w.norm_sqr() - &s2 * v.norm_sqr() - &t2 * u.norm_sqr();
        assert_eq!(pos.minors[2], rhs);
        // the fundamental form matches the parametrization
        let two_omega = fundamental_form(&h).scale(&Scalar::from_int(2));
        let m = |a, b| Monomial::new(&[a], &[b]).unwrap();
        assert_eq!(two_omega.coeff(&m(1, 2)), u);
        assert_eq!(two_omega.coeff(&m(2, 1)), -u.conj());
        assert_eq!(two_omega.coeff(&m(3, 3)), Scalar::i().scale(&t2));
    }

    #[test]
    fn identity_forms() {
        let g = HermitianMetric::identity(3);
        let expected = (1..=3)
            .map(|j| Form::from_factors(3, &[Holo(j), Anti(j)]))
            .fold(Form::zero(3), |a, b| &a + &b)
            .scale(&Scalar::from_ratios(0, 1, 1, 2));
        assert_eq!(*g.omega(), expected);
        // n = 2: vol = ¼ φ^{12 1̄2̄}
        let g2 = HermitianMetric::identity(2);
        let top = Monomial::new(&[1, 2], &[1, 2]).unwrap();
        assert_eq!(*g2.volume_form(), Form::term(2, top, Scalar::from_ratios(1, 4, 0, 1)));
        assert_eq!(
            g2.inner_product(g2.volume_form(), g2.volume_form()).unwrap(),
            Scalar::one()
        );
        assert_eq!(g.inner_product(&Form::holo(3, 1), &Form::holo(3, 1)).unwrap(), s(2, 0));
    }

    #[test]
    fn star_examples() {
        let g = HermitianMetric::identity(2);
        assert_eq!(g.star(&Form::one(2)).unwrap(), *g.volume_form());
        let x = Form::from_factors(2, &[Holo(1), Anti(1)]);
        assert_eq!(g.star(&x).unwrap(), -Form::from_factors(2, &[Holo(2), Anti(2)]));
        // anti-linearity
        assert_eq!(
            g.star(&x.scale(&Scalar::i())).unwrap(),
            g.star(&x).unwrap().scale(&-Scalar::i())
        );
    }

    #[test]
    fn lefschetz_star_constant_values() {
        assert_eq!(lefschetz_star_constant(2, 1), s(0, 1));
        assert_eq!(lefschetz_star_constant(3, 1), s(0, 2));
        assert_eq!(lefschetz_star_constant(3, 2), s(1, 0));
        assert_eq!(lefschetz_star_constant(4, 2), s(2, 0));
        assert_eq!(lefschetz_star_constant(4, 3), s(0, 1));
    }

    #[test]
    fn star_of_lefschetz_image_is_conjugate() {
        for n in 2..=4 {
            let g = HermitianMetric::identity(n);
            for p in 1..n {
                let c = lefschetz_star_constant(n, p);
                for m in basis(n, p, 0) {
                    let psi = Form::term(n, m, Scalar::from_ratios(1, 3, -2, 1));
                    let x = g.lefschetz_power(&psi, n - p).unwrap();
                    assert_eq!(g.star(&x).unwrap(), psi.conjugate().scale(&c), "n={n} p={p}");
                }
            }
        }
    }

    #[test]
    fn sl2c_star_of_omega_squared() {
        let g = HermitianMetric::identity(3);
        let w2 = g.lefschetz_power(&Form::holo(3, 1), 2).unwrap();
        // modulus 2, phase i
        assert_eq!(g.star(&w2).unwrap(), Form::anti(3, 1).scale(&s(0, 2)));
        assert_eq!(g.lefschetz_power(&Form::holo(3, 2), 0).unwrap(), Form::holo(3, 2));
    }

    #[test]
    fn delstar_on_closed_form() {
        let s = corpus::load("skt-nilmanifold").unwrap().equations;
        let g = HermitianMetric::identity(3);
        let x = g.lefschetz_power(&Form::holo(3, 1), 2).unwrap();
        assert!(g.del_adjoint(&x, &s).unwrap().is_zero());
        assert!(g.delbar_adjoint(&x, &s).unwrap().is_zero());
        assert!(g.del_adjoint(&Form::one(3), &s).unwrap().is_zero());
    }

    #[test]
    fn calabi_eckmann_pairing_negative() {
        let g = HermitianMetric::identity(3);
        let target = Form::from_factors(3, &[Holo(2), Anti(2), Holo(3), Anti(3)]);
        let w2 = g.omega().power(2);
        let v = g.l2_pairing(&w2, &target).unwrap();
        assert!(v.is_real() && v.re().is_negative(), "{v}");
        assert_eq!(v, s(-8, 0));
    }
}
