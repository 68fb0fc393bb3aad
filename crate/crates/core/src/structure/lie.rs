//! Recovery of the underlying real Lie algebra from complex structure equations.
//!
//! Writing `φ^k = a^k + i·b^k`, the real coframe is
//! `ρ = (a^1, …, a^n, b^1, …, b^n)` with
//! `a^k = (φ^k + φ̄^k)/2` and `b^k = (φ^k − φ̄^k)/(2i)`.
//! Each `dρ^m` is re-expressed in the `ρ`-basis by substituting
//! `φ^k = a^k + i·b^k`, `φ̄^k = a^k − i·b^k`, and brackets follow from
//! `dα(x, y) = −α([x, y])`: if `dρ^m = Σ_{a<b} E^m_{ab} ρ^a∧ρ^b` then
//! `[e_a, e_b] = −Σ_m E^m_{ab} e_m`.

use num::{One, Zero};

use super::StructureEquations;
use crate::exterior::Factor;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealLieAlgebra {
    dim: usize,
    /// `brackets[a][b][m]` is the `e_m`-coefficient of `[e_a, e_b]`.
    brackets: Vec<Vec<Vec<Rational>>>,
}

impl RealLieAlgebra {
    #[allow(clippy::needless_range_loop)]
    pub fn from_structure(s: &StructureEquations) -> Self {
        let n = s.n();
        let dim = 2 * n;
        // coordinates of a complex generator in the real coframe
        let expand = |f: Factor| -> Vec<Scalar> {
            let mut v = vec![Scalar::zero(); dim];
            match f {
                Factor::Holo(k) => {
                    v[k - 1] = Scalar::one();
                    v[n + k - 1] = Scalar::i();
                }
                Factor::Anti(k) => {
                    v[k - 1] = Scalar::one();
                    v[n + k - 1] = -Scalar::i();
                }
            }
            v
        };

        let half = Scalar::from_ratios(1, 2, 0, 1);
        let mut brackets = vec![vec![vec![Rational::zero(); dim]; dim]; dim];
        for m in 0..dim {
            let k = m % n + 1;
            let dphi = s.dgen(k);
            let dphibar = dphi.conjugate();
            let drho = if m < n {
                (dphi + &dphibar).scale(&half)
            } else {
                // (dφ − dφ̄)/(2i) = −(i/2)(dφ − dφ̄)
                (dphi - &dphibar).scale(&Scalar::from_ratios(0, 1, -1, 2))
            };
            // antisymmetric coefficient table of dρ^m on ρ^a ⊗ ρ^b
            let mut e = vec![vec![Scalar::zero(); dim]; dim];
            for (mono, c) in drho.terms() {
                let f = mono.factors();
                debug_assert_eq!(f.len(), 2);
                let (x, y) = (expand(f[0]), expand(f[1]));
                for a in 0..dim {
                    if x[a].is_zero() {
                        continue;
                    }
                    for b in 0..dim {
                        if y[b].is_zero() {
                            continue;
                        }
                        let v = c * &(&x[a] * &y[b]);
                        e[a][b] += &v;
                        e[b][a] -= &v;
                    }
                }
            }
            for a in 0..dim {
                for b in 0..dim {
                    let c = &e[a][b];
                    assert!(c.is_real(), "structure constants of a real algebra must be real");
                    // e[a][b] already counts ρ^a∧ρ^b for a<b (and its negative for a>b)
                    brackets[a][b][m] = -c.re().clone();
                }
            }
        }
        RealLieAlgebra { dim, brackets }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, a: usize, b: usize) -> &[Rational] {
        &self.brackets[a][b]
    }

    fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let xy = xa * yb;
                for (m, c) in self.brackets[a][b].iter().enumerate() {
                    if !c.is_zero() {
                        out[m] += xy.scale(c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_a}` (columns are images of basis vectors).
    pub fn ad(&self, a: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for b in 0..self.dim {
            for (k, c) in self.brackets[a][b].iter().enumerate() {
                m[(k, b)] = Scalar::real(c.clone());
            }
        }
        m
    }

    pub fn is_unimodular(&self) -> bool {
        (0..self.dim).all(|a| {
            (0..self.dim)
                .map(|b| self.brackets[a][b][b].clone())
                .sum::<Rational>()
                .is_zero()
        })
    }

    /// Dimensions of `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …` until the series stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut current = Subspace::full(self.dim);
        let mut dims = vec![current.dim()];
        loop {
            let mut gens = Vec::new();
            for a in 0..self.dim {
                let mut e = vec![Scalar::zero(); self.dim];
                e[a] = Scalar::one();
                for v in current.basis() {
                    gens.push(self.bracket_vec(&e, v));
                }
            }
            let next = Subspace::span(self.dim, gens);
            if next.dim() == current.dim() {
                return dims;
            }
            dims.push(next.dim());
            current = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    /// Residual of the Jacobi identity, `None` when it holds on all basis triples.
    pub fn jacobi_defect(&self) -> Option<(usize, usize, usize)> {
        let unit = |a: usize| {
            let mut e = vec![Scalar::zero(); self.dim];
            e[a] = Scalar::one();
            e
        };
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    let (ea, eb, ec) = (unit(a), unit(b), unit(c));
                    let t1 = self.bracket_vec(&ea, &self.bracket_vec(&eb, &ec));
                    let t2 = self.bracket_vec(&eb, &self.bracket_vec(&ec, &ea));
                    let t3 = self.bracket_vec(&ec, &self.bracket_vec(&ea, &eb));
                    if t1.iter().zip(&t2).zip(&t3).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use crate::corpus;
    use crate::scalar::rational;

    #[test]
    fn sl2c_real_form() {
        let g = corpus::load("sl2c").unwrap().equations.real_algebra();
        assert_eq!(g.dim(), 6);
        // dφ¹ = φ²³ gives [Z₂, Z₃] = −Z₁ on the real parts: a-index 1, 2 → −e_0
        assert_eq!(g.bracket(1, 2)[0], rational(-1, 1));
        assert!(g.jacobi_defect().is_none());
        assert!(g.is_unimodular());
        // perfect algebra: the series never shrinks
        assert_eq!(g.lower_central_series(), vec![6]);
    }

    #[test]
    fn nilpotent_series() {
        let g = corpus::load("iwasawa").unwrap().equations.real_algebra();
        assert!(g.jacobi_defect().is_none());
        assert_eq!(g.lower_central_series(), vec![6, 2, 0]);
    }

    #[test]
    fn all_corpus_real_algebras_satisfy_jacobi() {
        for name in corpus::NAMES {
            let g = corpus::load(name).unwrap().equations.real_algebra();
            assert!(g.jacobi_defect().is_none(), "{name}");
            for a in 0..g.dim() {
                for b in 0..g.dim() {
                    let ab: Vec<_> = g.bracket(a, b).to_vec();
                    let ba: Vec<_> = g.bracket(b, a).iter().map(|x| -x.clone()).collect();
                    assert_eq!(ab, ba, "{name}: antisymmetry");
                }
            }
        }
    }
}
