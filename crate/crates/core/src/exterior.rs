//! Sparse complex-valued forms over a fixed (1,0)-coframe `φ^1, …, φ^n`.
//!
//! A basis monomial `φ^{i₁…i_p} ∧ φ̄^{j₁…j_q}` always lists its holomorphic
//! factors first and its anti-holomorphic factors second, both ascending.
//! Every sign in the engine is computed against this normal form.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest supported coframe size.
pub const MAX_N: usize = 16;

/// A canonical wedge monomial, stored as two index bitmasks
/// (bit `k` stands for generator `k + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    holo: u32,
    anti: u32,
}

/// One factor of a (possibly unsorted) wedge product; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Holo(usize),
    Anti(usize),
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|k| mask & (1 << k) != 0).map(|k| k + 1).collect()
}

fn mask_of(idx: &[usize]) -> Option<u32> {
    let mut mask = 0u32;
    for &i in idx {
        if i == 0 || i > MAX_N {
            return None;
        }
        let bit = 1 << (i - 1);
        if mask & bit != 0 {
            return None;
        }
        mask |= bit;
    }
    Some(mask)
}

/// Lexicographic comparison of two equally sized ascending index lists.
fn lex_cmp(a: u32, b: u32) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Number of pairs `(x, y)` with `x ∈ first`, `y ∈ second`, `x > y`.
fn inversions(first: u32, second: u32) -> u32 {
    let mut count = 0;
    let mut rest = second;
    while rest != 0 {
        let y = rest.trailing_zeros();
        rest &= rest - 1;
        count += (first >> (y + 1)).count_ones();
    }
    count
}

impl Monomial {
    pub const ONE: Monomial = Monomial { holo: 0, anti: 0 };

    /// Builds a monomial from strictly increasing 1-based index lists.
    pub fn new(holo: &[usize], anti: &[usize]) -> Option<Self> {
        let ascending = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if !ascending(holo) || !ascending(anti) {
            return None;
        }
        Some(Monomial {
            holo: mask_of(holo)?,
            anti: mask_of(anti)?,
        })
    }

    pub fn holo(&self) -> Vec<usize> {
        indices(self.holo)
    }

    pub fn anti(&self) -> Vec<usize> {
        indices(self.anti)
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.holo.count_ones() as usize, self.anti.count_ones() as usize)
    }

    pub fn degree(&self) -> usize {
        let (p, q) = self.bidegree();
        p + q
    }

    /// The factors in canonical order.
    pub fn factors(&self) -> Vec<Factor> {
        self.holo()
            .into_iter()
            .map(Factor::Holo)
            .chain(self.anti().into_iter().map(Factor::Anti))
            .collect()
    }

    /// `self ∧ other` as a canonical monomial with its Koszul sign
    /// (`true` means negative), or `None` when a factor repeats.
    pub fn wedge(&self, other: &Monomial) -> Option<(Monomial, bool)> {
        if self.holo & other.holo != 0 || self.anti & other.anti != 0 {
            return None;
        }
        // φ^{H1} φ̄^{A1} φ^{H2} φ̄^{A2}: move φ^{H2} past φ̄^{A1}, then merge.
        let cross = self.anti.count_ones() * other.holo.count_ones();
        let flips = cross + inversions(self.holo, other.holo) + inversions(self.anti, other.anti);
        Some((
            Monomial {
                holo: self.holo | other.holo,
                anti: self.anti | other.anti,
            },
            flips % 2 == 1,
        ))
    }

    /// Conjugate monomial and sign: `conj(φ^H φ̄^A) = (−1)^{|H||A|} φ^A φ̄^H`.
    pub fn conjugate(&self) -> (Monomial, bool) {
        let flips = self.holo.count_ones() * self.anti.count_ones();
        (
            Monomial {
                holo: self.anti,
                anti: self.holo,
            },
            flips % 2 == 1,
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bidegree()
            .cmp(&other.bidegree())
            .then_with(|| lex_cmp(self.holo, other.holo))
            .then_with(|| lex_cmp(self.anti, other.anti))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `f1^f2^F1`; the empty monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holo == 0 && self.anti == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors()
            .into_iter()
            .map(|x| match x {
                Factor::Holo(i) => format!("f{i}"),
                Factor::Anti(i) => format!("F{i}"),
            })
            .collect();
        write!(f, "{}", parts.join("^"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn combinations(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, mask: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, mask | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// All canonical monomials of bidegree `(p, q)` in lexicographic order.
/// This order fixes matrix coordinates throughout the engine.
pub fn basis(n: usize, p: usize, q: usize) -> Vec<Monomial> {
    let holos = combinations(n, p);
    let antis = combinations(n, q);
    let mut out = Vec::with_capacity(holos.len() * antis.len());
    for &h in &holos {
        for &a in &antis {
            out.push(Monomial { holo: h, anti: a });
        }
    }
    out
}

/// All canonical monomials of total degree `k`, grouped by ascending bidegree.
pub fn basis_of_degree(n: usize, k: usize) -> Vec<Monomial> {
    (0..=k).flat_map(|p| basis(n, p, k - p)).collect()
}

/// A finite linear combination of canonical monomials with nonzero
/// Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Form {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N, "coframe size {n} exceeds {MAX_N}");
        Form {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Form::term(n, Monomial::ONE, c)
    }

    pub fn one(n: usize) -> Self {
        Form::constant(n, Scalar::one())
    }

    pub fn term(n: usize, m: Monomial, c: Scalar) -> Self {
        let mut f = Form::zero(n);
        f.add_term(m, c);
        f
    }

    /// `φ^i` (1-based).
    pub fn holo(n: usize, i: usize) -> Self {
        Form::from_factors(n, &[Factor::Holo(i)])
    }

    /// `φ̄^i` (1-based).
    pub fn anti(n: usize, i: usize) -> Self {
        Form::from_factors(n, &[Factor::Anti(i)])
    }

    /// The ordered wedge product of the given factors, reduced to canonical form.
    pub fn from_factors(n: usize, factors: &[Factor]) -> Self {
        let mut acc = Form::one(n);
        for f in factors {
            let (h, a) = match *f {
                Factor::Holo(i) => (vec![i], vec![]),
                Factor::Anti(i) => (vec![], vec![i]),
            };
            assert!(
                (1..=n).contains(&match *f {
                    Factor::Holo(i) | Factor::Anti(i) => i,
                }),
                "factor index out of range"
            );
            let m = Monomial::new(&h, &a).expect("valid factor");
            acc = acc.wedge_unchecked(&Form::term(n, m, Scalar::one()));
        }
        acc
    }

    /// Builds a form from coordinates against `basis`.
    pub fn from_coords(n: usize, basis: &[Monomial], coords: &[Scalar]) -> Self {
        assert_eq!(basis.len(), coords.len());
        let mut f = Form::zero(n);
        for (m, c) in basis.iter().zip(coords) {
            f.add_term(*m, c.clone());
        }
        f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coordinates of `self` against `basis`; monomials outside the basis are ignored.
    pub fn coords(&self, basis: &[Monomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coeff(m)).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// The common bidegree of all terms, if any (`None` for zero or mixed forms).
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// The common total degree of all terms, if any.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// All bidegrees that occur, ascending.
    pub fn bidegrees(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.terms.keys().map(Monomial::bidegree).collect();
        v.dedup();
        v.sort();
        v.dedup();
        v
    }

    fn check_n(&self, other: &Form) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.check_n(other)?;
        Ok(self.wedge_unchecked(other))
    }

    pub(crate) fn wedge_unchecked(&self, other: &Form) -> Form {
        debug_assert_eq!(self.n, other.n);
        let mut out = Form::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, neg)) = ma.wedge(mb) {
                    let c = ca * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// `self^k` under the wedge product.
    pub fn power(&self, k: usize) -> Form {
        let mut acc = Form::one(self.n);
        for _ in 0..k {
            acc = acc.wedge_unchecked(self);
        }
        acc
    }

    pub fn conjugate(&self) -> Form {
        let mut out = Form::zero(self.n);
        for (m, c) in &self.terms {
            let (cm, neg) = m.conjugate();
            let cc = c.conj();
            out.add_term(cm, if neg { -cc } else { cc });
        }
        out
    }

    /// The `(p, q)`-component.
    pub fn project(&self, p: usize, q: usize) -> Form {
        Form {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.bidegree() == (p, q))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Form {
        let mut out = Form::zero(self.n);
        if c.is_zero() {
            return out;
        }
        for (m, x) in &self.terms {
            out.terms.insert(*m, x * c);
        }
        out
    }

    pub fn checked_add(&self, other: &Form) -> Result<Form> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.checked_add(rhs).expect("adding forms of different coframe size")
    }
}

impl Add for Form {
    type Output = Form;
    fn add(self, rhs: Form) -> Form {
        &self + &rhs
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self + &(-rhs)
    }
}

impl Sub for Form {
    type Output = Form;
    fn sub(self, rhs: Form) -> Form {
        &self - &rhs
    }
}

/// Renders in the term syntax of `.lie` files, e.g. `-1/2*f1^f2 + 1/2*f1^F2`.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == Monomial::ONE {
                    c.to_string()
                } else if c.is_one() {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[n={}]({})", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Factor::{Anti, Holo};

    fn mono(h: &[usize], a: &[usize]) -> Monomial {
        Monomial::new(h, a).unwrap()
    }

    #[test]
    fn wedge_signs() {
        let n = 3;
        let e12 = Form::term(n, mono(&[1, 2], &[]), Scalar::one());
        assert_eq!(Form::holo(n, 1).wedge(&Form::holo(n, 2)).unwrap(), e12);
        assert_eq!(Form::holo(n, 2).wedge(&Form::holo(n, 1)).unwrap(), -&e12);
        assert!(Form::holo(n, 1).wedge(&Form::holo(n, 1)).unwrap().is_zero());
        // φ̄¹ ∧ φ² = −φ² ∧ φ̄¹
        assert_eq!(
            Form::from_factors(n, &[Anti(1), Holo(2)]),
            Form::term(n, mono(&[2], &[1]), -Scalar::one())
        );
    }

    #[test]
    fn wedge_dimension_mismatch() {
        let err = Form::holo(2, 1).wedge(&Form::holo(3, 1)).unwrap_err();
        assert_eq!(err, Error::Dimension { left: 2, right: 3 });
    }

    #[test]
    fn calabi_eckmann_omega_squared() {
        // γ = (i/2)(ψ^{11̄} + ψ^{22̄} + ψ^{33̄})
        let n = 3;
        let half_i = Scalar::from_ratios(0, 1, 1, 2);
        let mut gamma = Form::zero(n);
        for j in 1..=3 {
            gamma = &gamma + &Form::from_factors(n, &[Holo(j), Anti(j)]).scale(&half_i);
        }
        let pair = |a: usize, b: usize| Form::from_factors(n, &[Holo(a), Anti(a), Holo(b), Anti(b)]);
        let expected = (&(&pair(1, 2) + &pair(1, 3)) + &pair(2, 3)).scale(&Scalar::from_ratios(-1, 2, 0, 1));
        assert_eq!(gamma.wedge(&gamma).unwrap(), expected);
    }

    #[test]
    fn conjugation() {
        let n = 2;
        assert_eq!(Form::holo(n, 1).conjugate(), Form::anti(n, 1));
        // conj(i φ¹∧φ̄²) = −i φ̄¹∧φ² = i φ²∧φ̄¹
        let x = Form::term(n, mono(&[1], &[2]), Scalar::i());
        assert_eq!(x.conjugate(), Form::term(n, mono(&[2], &[1]), Scalar::i()));
        let omega = (&Form::from_factors(n, &[Holo(1), Anti(1)]) + &Form::from_factors(n, &[Holo(2), Anti(2)]))
            .scale(&Scalar::from_ratios(0, 1, 1, 2));
        assert_eq!(omega.conjugate(), omega);
    }

    #[test]
    fn projection() {
        let n = 2;
        let e12 = Form::term(n, mono(&[1, 2], &[]), Scalar::one());
        let e12b = Form::term(n, mono(&[1], &[2]), Scalar::one());
        assert_eq!((&e12 + &e12b).project(2, 0), e12);
        assert!(e12.project(1, 1).is_zero());
        // secondary Kodaira dφ¹ = −½φ^{12} + ½φ^{12̄}
        let half = Scalar::from_ratios(1, 2, 0, 1);
        let d1 = &e12.scale(&-half.clone()) + &e12b.scale(&half);
        assert_eq!(d1.project(1, 1), e12b.scale(&half));
        assert_eq!(d1.bidegree(), None);
        assert_eq!(d1.degree(), Some(2));
    }

    #[test]
    fn basis_order() {
        let b = basis(3, 1, 0);
        assert_eq!(b, vec![mono(&[1], &[]), mono(&[2], &[]), mono(&[3], &[])]);
        assert_eq!(basis(3, 2, 2).len(), 9);
        assert_eq!(
            basis(2, 1, 1),
            vec![mono(&[1], &[1]), mono(&[1], &[2]), mono(&[2], &[1]), mono(&[2], &[2])]
        );
        assert_eq!(basis(4, 2, 0).len(), 6);
        assert!(basis(2, 3, 0).is_empty());
        let b = basis(4, 2, 1);
        assert!(b.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn top_degree_cap() {
        let n = 2;
        let top = Form::from_factors(n, &[Holo(1), Holo(2), Anti(1), Anti(2)]);
        assert!(top.wedge(&Form::holo(n, 1)).unwrap().is_zero());
    }

    #[test]
    fn display() {
        let n = 2;
        let f = &Form::term(n, mono(&[1, 2], &[]), Scalar::from_ratios(-1, 2, 0, 1))
            + &Form::term(n, mono(&[1], &[2]), Scalar::one());
        assert_eq!(f.to_string(), "f1^F2 + -1/2*f1^f2");
        assert_eq!(Form::zero(2).to_string(), "0");
        assert_eq!(Form::one(2).to_string(), "1");
    }
}
