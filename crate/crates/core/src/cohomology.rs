//! Exact cohomology of invariant forms.
//!
//! Every operator is turned into a matrix over the canonical monomial basis
//! of its source and target spaces. Dimensions come from quotients of
//! kernels by images and need no metric. Harmonic spaces use the metric and
//! are only offered on unimodular algebras, where `∂*` and `∂̄*` are the
//! genuine adjoints of `∂` and `∂̄` on invariant forms.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{basis, basis_of_degree, Form, Monomial};
use crate::hodge::HermitianMetric;
use crate::linalg::{quotient, Matrix, Subspace};
use crate::scalar::Scalar;
use crate::structure::StructureEquations;

/// A space of invariant forms with its canonical basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Bidegree(usize, usize),
    Degree(usize),
}

impl Space {
    pub fn basis(&self, n: usize) -> Vec<Monomial> {
        match *self {
            Space::Bidegree(p, q) if p <= n && q <= n => basis(n, p, q),
            Space::Degree(k) if k <= 2 * n => basis_of_degree(n, k),
            _ => Vec::new(),
        }
    }

    pub fn dim(&self, n: usize) -> usize {
        self.basis(n).len()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Bidegree(p, q) => write!(f, "Λ^({p},{q})"),
            Space::Degree(k) => write!(f, "Λ^{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Operator {
    D,
    Del,
    Delbar,
    DelAdjoint,
    DelbarAdjoint,
    /// `∂∂̄`, i.e. `∂̄` applied first.
    DelDelbar,
    LaplacianBC,
    LaplacianA,
}

impl Operator {
    pub fn name(self) -> &'static str {
        match self {
            Operator::D => "d",
            Operator::Del => "del",
            Operator::Delbar => "delbar",
            Operator::DelAdjoint => "del*",
            Operator::DelbarAdjoint => "delbar*",
            Operator::DelDelbar => "del delbar",
            Operator::LaplacianBC => "Bott-Chern Laplacian",
            Operator::LaplacianA => "Aeppli Laplacian",
        }
    }

    pub fn needs_metric(self) -> bool {
        matches!(
            self,
            Operator::DelAdjoint | Operator::DelbarAdjoint | Operator::LaplacianBC | Operator::LaplacianA
        )
    }

    /// Bidegree shift `(dp, dq)`; `None` for `d`, which is not bigraded.
    pub fn shift(self) -> Option<(isize, isize)> {
        Some(match self {
            Operator::D => return None,
            Operator::Del => (1, 0),
            Operator::Delbar => (0, 1),
            Operator::DelAdjoint => (-1, 0),
            Operator::DelbarAdjoint => (0, -1),
            Operator::DelDelbar => (1, 1),
            Operator::LaplacianBC | Operator::LaplacianA => (0, 0),
        })
    }
}

/// Matrix of a linear operator: column `j` holds the image of the `j`-th
/// source basis monomial in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub operator: Operator,
    pub source: Space,
    pub target: Space,
    pub matrix: Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Laplacian {
    BottChern,
    Aeppli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupKind {
    BottChern,
    Aeppli,
    Dolbeault,
    DeRham,
}

/// A finite-dimensional invariant cohomology group with representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyGroup {
    pub kind: GroupKind,
    pub space: Space,
    pub dim: usize,
    pub representatives: Vec<Form>,
}

/// `a = harmonic + second_order + del_part + delbar_part`.
///
/// Bott-Chern: `second_order = ∂∂̄γ`, `del_part = ∂*α`, `delbar_part = ∂̄*β`.
/// Aeppli: `second_order = ∂*∂̄*η`, `del_part = ∂μ`, `delbar_part = ∂̄λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDecomposition {
    pub kind: Laplacian,
    pub harmonic: Form,
    pub second_order: Form,
    pub second_order_potential: Form,
    pub del_part: Form,
    pub del_potential: Form,
    pub delbar_part: Form,
    pub delbar_potential: Form,
}

impl HodgeDecomposition {
    pub fn sum(&self) -> Form {
        &(&self.harmonic + &self.second_order) + &(&self.del_part + &self.delbar_part)
    }
}

type CacheKey = (Operator, isize, isize);

/// Operator matrices for one set of structure equations and an optional
/// metric, cached per bidegree.
pub struct Cohomology<'a> {
    s: &'a StructureEquations,
    metric: Option<&'a HermitianMetric>,
    cache: Mutex<HashMap<CacheKey, Arc<Matrix>>>,
}

impl<'a> Cohomology<'a> {
    pub fn new(s: &'a StructureEquations, metric: Option<&'a HermitianMetric>) -> Result<Self> {
        if let Some(h) = metric {
            if h.n() != s.n() {
                return Err(Error::Dimension {
                    left: s.n(),
                    right: h.n(),
                });
            }
        }
        Ok(Cohomology {
            s,
            metric,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn structure(&self) -> &StructureEquations {
        self.s
    }

    pub fn metric(&self) -> Option<&HermitianMetric> {
        self.metric
    }

    fn n(&self) -> usize {
        self.s.n()
    }

    fn require_integrable(&self) -> Result<()> {
        self.s.require_integrable()
    }

    fn require_metric(&self, op: Operator) -> Result<&HermitianMetric> {
        self.metric.ok_or(Error::MissingMetric(op.name()))
    }

    fn require_harmonic_setting(&self, op: Operator) -> Result<&HermitianMetric> {
        self.require_integrable()?;
        let h = self.require_metric(op)?;
        if !self.s.flags().unimodular {
            return Err(Error::NotUnimodular);
        }
        Ok(h)
    }

    fn dim(&self, p: isize, q: isize) -> usize {
        if p < 0 || q < 0 {
            return 0;
        }
        Space::Bidegree(p as usize, q as usize).dim(self.n())
    }

    fn bidegree_basis(&self, p: isize, q: isize) -> Vec<Monomial> {
        if p < 0 || q < 0 {
            return Vec::new();
        }
        Space::Bidegree(p as usize, q as usize).basis(self.n())
    }

    /// Matrix of `op` on the given source space.
    pub fn operator_matrix(&self, op: Operator, source: Space) -> Result<OperatorMatrix> {
        match (op, source) {
            (Operator::D, Space::Degree(k)) => Ok(OperatorMatrix {
                operator: op,
                source,
                target: Space::Degree(k + 1),
                matrix: self.d_matrix(k),
            }),
            (Operator::D, Space::Bidegree(p, q)) => {
                let n = self.n();
                let src = source.basis(n);
                let target = Space::Degree(p + q + 1);
                let dst = target.basis(n);
                let cols: Vec<Vec<Scalar>> = src.iter().map(|m| self.s.d_monomial(m).coords(&dst)).collect();
                Ok(OperatorMatrix {
                    operator: op,
                    source,
                    target,
                    matrix: Matrix::from_columns(dst.len(), &cols),
                })
            }
            (_, Space::Bidegree(p, q)) => {
                let (dp, dq) = op.shift().expect("bigraded");
                let (p, q) = (p as isize, q as isize);
                let matrix = self.bigraded(op, p, q)?;
                let target = Space::Bidegree((p + dp).max(0) as usize, (q + dq).max(0) as usize);
                Ok(OperatorMatrix {
                    operator: op,
                    source,
                    target,
                    matrix: (*matrix).clone(),
                })
            }
            (_, Space::Degree(_)) => Err(Error::NotPure),
        }
    }

    fn d_matrix(&self, k: usize) -> Matrix {
        let n = self.n();
        let src = Space::Degree(k).basis(n);
        let dst = Space::Degree(k + 1).basis(n);
        let cols: Vec<Vec<Scalar>> = src.iter().map(|m| self.s.d_monomial(m).coords(&dst)).collect();
        Matrix::from_columns(dst.len(), &cols)
    }

    /// Matrix of a bigraded operator from `Λ^{p,q}`; empty when the source
    /// or target lies outside the bidegree range.
    fn bigraded(&self, op: Operator, p: isize, q: isize) -> Result<Arc<Matrix>> {
        if op != Operator::D {
            self.require_integrable()?;
        }
        if op.needs_metric() {
            self.require_metric(op)?;
        }
        let key = (op, p, q);
        if let Some(m) = self.cache.lock().expect("cache poisoned").get(&key) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.build(op, p, q)?);
        self.cache
            .lock()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(m.clone());
        Ok(m)
    }

    fn build(&self, op: Operator, p: isize, q: isize) -> Result<Matrix> {
        use Operator::*;
        let (dp, dq) = op.shift().expect("bigraded");
        let rows = self.dim(p + dp, q + dq);
        let cols = self.dim(p, q);
        if rows == 0 || cols == 0 {
            return Ok(Matrix::zeros(rows, cols));
        }
        let n = self.n();
        match op {
            LaplacianBC => {
                let terms: [&[Operator]; 6] = [
                    &[DelAdjoint, DelbarAdjoint, Delbar, Del],
                    &[Delbar, Del, DelAdjoint, DelbarAdjoint],
                    &[Delbar, DelAdjoint, Del, DelbarAdjoint],
                    &[Del, DelbarAdjoint, Delbar, DelAdjoint],
                    &[Delbar, DelbarAdjoint],
                    &[Del, DelAdjoint],
                ];
                self.sum_of_chains(&terms, p, q)
            }
            LaplacianA => {
                let terms: [&[Operator]; 6] = [
                    &[DelAdjoint, Del],
                    &[DelbarAdjoint, Delbar],
                    &[Delbar, Del, DelAdjoint, DelbarAdjoint],
                    &[DelAdjoint, DelbarAdjoint, Delbar, Del],
                    &[DelAdjoint, Delbar, DelbarAdjoint, Del],
                    &[DelbarAdjoint, Del, DelAdjoint, Delbar],
                ];
                self.sum_of_chains(&terms, p, q)
            }
            _ => {
                let src = self.bidegree_basis(p, q);
                let dst = self.bidegree_basis(p + dp, q + dq);
                let mut columns = Vec::with_capacity(src.len());
                for m in src {
                    let f = Form::term(n, m, Scalar::from_int(1));
                    let image = self.apply(op, &f)?;
                    columns.push(image.coords(&dst));
                }
                Ok(Matrix::from_columns(dst.len(), &columns))
            }
        }
    }

    fn apply(&self, op: Operator, f: &Form) -> Result<Form> {
        let s = self.s;
        match op {
            Operator::D => s.d(f),
            Operator::Del => s.del(f),
            Operator::Delbar => s.delbar(f),
            Operator::DelDelbar => s.del(&s.delbar(f)?),
            Operator::DelAdjoint => self.require_metric(op)?.del_adjoint(f, s),
            Operator::DelbarAdjoint => self.require_metric(op)?.delbar_adjoint(f, s),
            Operator::LaplacianBC | Operator::LaplacianA => unreachable!("composed from matrices"),
        }
    }

    /// Matrix of `ops[k−1] ∘ … ∘ ops[0]` starting at `Λ^{p,q}`.
    fn chain(&self, ops: &[Operator], p: isize, q: isize) -> Result<Matrix> {
        let (mut p, mut q) = (p, q);
        let mut acc = Matrix::identity(self.dim(p, q));
        for &op in ops {
            let m = self.bigraded(op, p, q)?;
            acc = &*m * &acc;
            let (dp, dq) = op.shift().expect("bigraded");
            p += dp;
            q += dq;
        }
        Ok(acc)
    }

    fn sum_of_chains(&self, chains: &[&[Operator]], p: isize, q: isize) -> Result<Matrix> {
        let d = self.dim(p, q);
        let mut acc = Matrix::zeros(d, d);
        for ops in chains {
            acc = acc.add(&self.chain(ops, p, q)?);
        }
        Ok(acc)
    }

    fn matrix(&self, op: Operator, p: usize, q: usize) -> Result<Arc<Matrix>> {
        self.bigraded(op, p as isize, q as isize)
    }

    /// Image of an operator landing in `Λ^{p,q}` from `Λ^{p−dp, q−dq}`.
    fn image_into(&self, ops: &[Operator], src: (isize, isize), p: usize, q: usize) -> Result<Subspace> {
        let ambient = self.dim(p as isize, q as isize);
        if src.0 < 0 || src.1 < 0 {
            return Ok(Subspace::zero(ambient));
        }
        Ok(self.chain(ops, src.0, src.1)?.image())
    }

    fn check_bidegree(&self, p: usize, q: usize) -> Result<()> {
        let n = self.n();
        if p > n || q > n {
            return Err(Error::Bidegree { p, q, n });
        }
        Ok(())
    }

    fn forms(&self, space: Space, vectors: &[Vec<Scalar>]) -> Vec<Form> {
        let b = space.basis(self.n());
        vectors.iter().map(|v| Form::from_coords(self.n(), &b, v)).collect()
    }

    fn group(&self, kind: GroupKind, space: Space, num: &Subspace, den: &Subspace) -> Result<CohomologyGroup> {
        let quot = quotient(num, den)?;
        Ok(CohomologyGroup {
            kind,
            space,
            dim: quot.dim,
            representatives: self.forms(space, &quot.representatives),
        })
    }

    /// `ker ∂ ∩ ker ∂̄` in `Λ^{p,q}`.
    pub fn del_delbar_closed(&self, p: usize, q: usize) -> Result<Subspace> {
        let a = self.matrix(Operator::Del, p, q)?;
        let b = self.matrix(Operator::Delbar, p, q)?;
        Ok(a.vstack(&b).kernel())
    }

    /// `(ker ∂ ∩ ker ∂̄) / im ∂∂̄`.
    pub fn bott_chern(&self, p: usize, q: usize) -> Result<CohomologyGroup> {
        self.check_bidegree(p, q)?;
        let num = self.del_delbar_closed(p, q)?;
        let (pi, qi) = (p as isize, q as isize);
        let den = self.image_into(&[Operator::DelDelbar], (pi - 1, qi - 1), p, q)?;
        self.group(GroupKind::BottChern, Space::Bidegree(p, q), &num, &den)
    }

    /// `ker ∂∂̄ / (im ∂ + im ∂̄)`.
    pub fn aeppli(&self, p: usize, q: usize) -> Result<CohomologyGroup> {
        self.check_bidegree(p, q)?;
        let num = self.matrix(Operator::DelDelbar, p, q)?.kernel();
        let (pi, qi) = (p as isize, q as isize);
        let den = self
            .image_into(&[Operator::Del], (pi - 1, qi), p, q)?
            .sum(&self.image_into(&[Operator::Delbar], (pi, qi - 1), p, q)?);
        self.group(GroupKind::Aeppli, Space::Bidegree(p, q), &num, &den)
    }

    /// `ker ∂̄ / im ∂̄`.
    pub fn dolbeault(&self, p: usize, q: usize) -> Result<CohomologyGroup> {
        self.check_bidegree(p, q)?;
        let num = self.matrix(Operator::Delbar, p, q)?.kernel();
        let den = self.image_into(&[Operator::Delbar], (p as isize, q as isize - 1), p, q)?;
        self.group(GroupKind::Dolbeault, Space::Bidegree(p, q), &num, &den)
    }

    /// `ker d / im d` in total degree `k`. Does not need integrability.
    pub fn de_rham(&self, k: usize) -> Result<CohomologyGroup> {
        let n = self.n();
        if k > 2 * n {
            return Err(Error::Bidegree { p: k, q: 0, n });
        }
        let num = self.d_matrix(k).kernel();
        let den = if k == 0 {
            Subspace::zero(Space::Degree(0).dim(n))
        } else {
            self.d_matrix(k - 1).image()
        };
        self.group(GroupKind::DeRham, Space::Degree(k), &num, &den)
    }

    /// Harmonic forms by the first-order characterization:
    /// Bott-Chern `∂u = ∂̄u = ∂*∂̄*u = 0`, Aeppli `∂*v = ∂̄*v = ∂∂̄v = 0`.
    pub fn harmonic_space(&self, which: Laplacian, p: usize, q: usize) -> Result<Subspace> {
        self.check_bidegree(p, q)?;
        let (pi, qi) = (p as isize, q as isize);
        let stacked = match which {
            Laplacian::BottChern => {
                self.require_harmonic_setting(Operator::LaplacianBC)?;
                let second = self.chain(&[Operator::DelbarAdjoint, Operator::DelAdjoint], pi, qi)?;
                self.matrix(Operator::Del, p, q)?
                    .vstack(&*self.matrix(Operator::Delbar, p, q)?)
                    .vstack(&second)
            }
            Laplacian::Aeppli => {
                self.require_harmonic_setting(Operator::LaplacianA)?;
                self.matrix(Operator::DelAdjoint, p, q)?
                    .vstack(&*self.matrix(Operator::DelbarAdjoint, p, q)?)
                    .vstack(&*self.matrix(Operator::DelDelbar, p, q)?)
            }
        };
        Ok(stacked.kernel())
    }

    /// Kernel of the full fourth-order Laplacian.
    pub fn laplacian_kernel(&self, which: Laplacian, p: usize, q: usize) -> Result<Subspace> {
        self.check_bidegree(p, q)?;
        let op = match which {
            Laplacian::BottChern => Operator::LaplacianBC,
            Laplacian::Aeppli => Operator::LaplacianA,
        };
        self.require_harmonic_setting(op)?;
        Ok(self.matrix(op, p, q)?.kernel())
    }

    pub fn harmonic_forms(&self, which: Laplacian, p: usize, q: usize) -> Result<Vec<Form>> {
        let h = self.harmonic_space(which, p, q)?;
        Ok(self.forms(Space::Bidegree(p, q), h.basis()))
    }

    /// Splits a pure form along the harmonic, second-order and first-order
    /// images. The first-order part is split by a particular solution and is
    /// unique only as a sum.
    pub fn hodge_decompose(&self, which: Laplacian, a: &Form) -> Result<HodgeDecomposition> {
        let n = self.n();
        if a.n() != n {
            return Err(Error::Dimension { left: n, right: a.n() });
        }
        let (p, q) = a.bidegree().ok_or(Error::NotPure)?;
        let (pi, qi) = (p as isize, q as isize);
        let harmonic = self.harmonic_space(which, p, q)?.matrix();
        use Operator::*;
        let (second, del, delbar, src) = match which {
            Laplacian::BottChern => (
                self.chain_or_empty(&[Delbar, Del], pi - 1, qi - 1, p, q)?,
                self.chain_or_empty(&[DelAdjoint], pi + 1, qi, p, q)?,
                self.chain_or_empty(&[DelbarAdjoint], pi, qi + 1, p, q)?,
                [(pi - 1, qi - 1), (pi + 1, qi), (pi, qi + 1)],
            ),
            Laplacian::Aeppli => (
                self.chain_or_empty(&[DelbarAdjoint, DelAdjoint], pi + 1, qi + 1, p, q)?,
                self.chain_or_empty(&[Del], pi - 1, qi, p, q)?,
                self.chain_or_empty(&[Delbar], pi, qi - 1, p, q)?,
                [(pi + 1, qi + 1), (pi - 1, qi), (pi, qi - 1)],
            ),
        };
        let system = harmonic.hstack(&second).hstack(&del).hstack(&delbar);
        let monos = basis(n, p, q);
        let target = a.coords(&monos);
        let x = system
            .solve(&target)
            .ok_or_else(|| Error::Containment { witness: a.to_string() })?;
        let widths = [harmonic.cols(), second.cols(), del.cols(), delbar.cols()];
        let mut offset = 0;
        let mut parts: Vec<Vec<Scalar>> = Vec::new();
        for w in widths {
            parts.push(x[offset..offset + w].to_vec());
            offset += w;
        }
        let coefficient_form = |m: &Matrix, c: &[Scalar]| Form::from_coords(n, &monos, &m.mul_vec(c));
        let potential = |(sp, sq): (isize, isize), c: &[Scalar]| {
            if c.is_empty() {
                Form::zero(n)
            } else {
                Form::from_coords(n, &self.bidegree_basis(sp, sq), c)
            }
        };
        Ok(HodgeDecomposition {
            kind: which,
            harmonic: coefficient_form(&harmonic, &parts[0]),
            second_order: coefficient_form(&second, &parts[1]),
            second_order_potential: potential(src[0], &parts[1]),
            del_part: coefficient_form(&del, &parts[2]),
            del_potential: potential(src[1], &parts[2]),
            delbar_part: coefficient_form(&delbar, &parts[3]),
            delbar_potential: potential(src[2], &parts[3]),
        })
    }

    fn chain_or_empty(&self, ops: &[Operator], sp: isize, sq: isize, p: usize, q: usize) -> Result<Matrix> {
        let rows = self.dim(p as isize, q as isize);
        if sp < 0 || sq < 0 || self.dim(sp, sq) == 0 {
            return Ok(Matrix::zeros(rows, 0));
        }
        self.chain(ops, sp, sq)
    }

    /// Solves `target = ∂μ + ∂̄λ` with `μ ∈ Λ^{p−1,q}`, `λ ∈ Λ^{p,q−1}` where
    /// `(p,q)` is the bidegree of `target`.
    pub fn del_plus_delbar_preimage(&self, target: &Form) -> Result<Option<(Form, Form)>> {
        let n = self.n();
        let (p, q) = target.bidegree().ok_or(Error::NotPure)?;
        let (pi, qi) = (p as isize, q as isize);
        let del = self.chain_or_empty(&[Operator::Del], pi - 1, qi, p, q)?;
        let delbar = self.chain_or_empty(&[Operator::Delbar], pi, qi - 1, p, q)?;
        let system = del.hstack(&delbar);
        let Some(x) = system.solve(&target.coords(&basis(n, p, q))) else {
            return Ok(None);
        };
        let (xm, xl) = x.split_at(del.cols());
        let mu = if xm.is_empty() {
            Form::zero(n)
        } else {
            Form::from_coords(n, &self.bidegree_basis(pi - 1, qi), xm)
        };
        let lambda = if xl.is_empty() {
            Form::zero(n)
        } else {
            Form::from_coords(n, &self.bidegree_basis(pi, qi - 1), xl)
        };
        Ok(Some((mu, lambda)))
    }
}

/// `dim` and representatives of `H_BC^{p,q}`.
pub fn bc_cohomology(s: &StructureEquations, p: usize, q: usize) -> Result<CohomologyGroup> {
    Cohomology::new(s, None)?.bott_chern(p, q)
}

pub fn aeppli_cohomology(s: &StructureEquations, p: usize, q: usize) -> Result<CohomologyGroup> {
    Cohomology::new(s, None)?.aeppli(p, q)
}

pub fn dolbeault(s: &StructureEquations, p: usize, q: usize) -> Result<usize> {
    Ok(Cohomology::new(s, None)?.dolbeault(p, q)?.dim)
}

pub fn derham(s: &StructureEquations, k: usize) -> Result<usize> {
    Ok(Cohomology::new(s, None)?.de_rham(k)?.dim)
}

pub fn harmonic_space(
    which: Laplacian,
    p: usize,
    q: usize,
    s: &StructureEquations,
    h: &HermitianMetric,
) -> Result<Subspace> {
    Cohomology::new(s, Some(h))?.harmonic_space(which, p, q)
}

pub fn hodge_decompose(
    which: Laplacian,
    a: &Form,
    s: &StructureEquations,
    h: &HermitianMetric,
) -> Result<HodgeDecomposition> {
    Cohomology::new(s, Some(h))?.hodge_decompose(which, a)
}

pub fn operator_matrix(
    op: Operator,
    source: Space,
    s: &StructureEquations,
    h: Option<&HermitianMetric>,
) -> Result<OperatorMatrix> {
    Cohomology::new(s, h)?.operator_matrix(op, source)
}

/// Coordinates of `a` in the span of `forms`, if it lies there.
pub fn coordinates_in(forms: &[Form], a: &Form) -> Option<Vec<Scalar>> {
    let mut monos: Vec<Monomial> = forms
        .iter()
        .chain(std::iter::once(a))
        .flat_map(|f| f.terms().map(|(m, _)| *m))
        .collect();
    monos.sort();
    monos.dedup();
    if forms.is_empty() {
        return a.is_zero().then(Vec::new);
    }
    let cols: Vec<Vec<Scalar>> = forms.iter().map(|f| f.coords(&monos)).collect();
    let m = Matrix::from_columns(monos.len(), &cols);
    m.solve(&a.coords(&monos))
}

/// Whether `a − b` lies in the span of `forms`.
pub fn congruent_modulo(a: &Form, b: &Form, forms: &[Form]) -> bool {
    let diff = a - b;
    diff.is_zero() || coordinates_in(forms, &diff).is_some()
}
