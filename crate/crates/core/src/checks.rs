//! Structural identities checked exactly on concrete inputs. Each check
//! returns `Err` with a description of the first violation found.

use rand::Rng;

use crate::analysis::{aeppli_class_vanishes, classify_metric, closed_p0_space};
use crate::cohomology::{Cohomology, Laplacian, Operator, Space};
use crate::corpus::Expected;
use crate::error::Error;
use crate::exterior::{basis, basis_of_degree, Form};
use crate::hodge::HermitianMetric;
use crate::linalg::Matrix;
use crate::random::random_form;
use crate::scalar::Scalar;
use crate::structure::StructureEquations;

pub type Check = Result<(), String>;

fn err(e: Error) -> String {
    e.to_string()
}

fn unit(n: usize, m: crate::exterior::Monomial) -> Form {
    Form::term(n, m, Scalar::from_int(1))
}

/// `d² = 0` on every monomial.
pub fn d_squared(s: &StructureEquations) -> Check {
    let n = s.n();
    for k in 0..=2 * n {
        for m in basis_of_degree(n, k) {
            let dd = s.d(&s.d(&unit(n, m)).map_err(err)?).map_err(err)?;
            if !dd.is_zero() {
                return Err(format!("d²({m}) = {dd}"));
            }
        }
    }
    Ok(())
}

/// `∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0` as matrix identities on every bidegree.
pub fn bigraded_identities(s: &StructureEquations) -> Check {
    let n = s.n();
    let c = Cohomology::new(s, None).map_err(err)?;
    let m = |op, p: usize, q: usize| {
        c.operator_matrix(op, Space::Bidegree(p, q))
            .map(|x| x.matrix)
            .map_err(err)
    };
    for p in 0..=n {
        for q in 0..=n {
            let del = m(Operator::Del, p, q)?;
            let delbar = m(Operator::Delbar, p, q)?;
            if p < n && !(&m(Operator::Del, p + 1, q)? * &del).is_zero() {
                return Err(format!("∂² ≠ 0 on Λ^({p},{q})"));
            }
            if q < n && !(&m(Operator::Delbar, p, q + 1)? * &delbar).is_zero() {
                return Err(format!("∂̄² ≠ 0 on Λ^({p},{q})"));
            }
            if p < n && q < n {
                let a = &m(Operator::Del, p, q + 1)? * &delbar;
                let b = &m(Operator::Delbar, p + 1, q)? * &del;
                if !a.add(&b).is_zero() {
                    return Err(format!("∂∂̄ + ∂̄∂ ≠ 0 on Λ^({p},{q})"));
                }
            }
        }
    }
    Ok(())
}

/// `d(a∧b) = da∧b + (−1)^{deg a} a∧db` on random pure pairs.
pub fn leibniz<R: Rng>(s: &StructureEquations, rng: &mut R, pairs: usize) -> Check {
    let n = s.n();
    for _ in 0..pairs {
        let (p1, q1) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let (p2, q2) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let a = random_form(rng, n, p1, q1);
        let b = random_form(rng, n, p2, q2);
        let lhs = s.d(&a.wedge(&b).map_err(err)?).map_err(err)?;
        let mut second = a.wedge(&s.d(&b).map_err(err)?).map_err(err)?;
        if (p1 + q1) % 2 == 1 {
            second = -second;
        }
        let rhs = &s.d(&a).map_err(err)?.wedge(&b).map_err(err)? + &second;
        if lhs != rhs {
            return Err(format!("Leibniz fails for a = {a}, b = {b}"));
        }
    }
    Ok(())
}

/// `α ∧ *β = ⟨α, β⟩ vol` for all monomial pairs of equal bidegree.
pub fn star_defining_relation(h: &HermitianMetric) -> Check {
    let n = h.n();
    for p in 0..=n {
        for q in 0..=n {
            let monos = basis(n, p, q);
            for &b in &monos {
                let beta = unit(n, b);
                let star = h.star(&beta).map_err(err)?;
                for &a in &monos {
                    let alpha = unit(n, a);
                    let lhs = alpha.wedge(&star).map_err(err)?;
                    let rhs = h.volume_form().scale(&h.inner_product(&alpha, &beta).map_err(err)?);
                    if lhs != rhs {
                        return Err(format!("α∧*β ≠ ⟨α,β⟩vol for α = {a}, β = {b}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The defining relation on random pure pairs (for larger `n`).
pub fn star_defining_relation_sampled<R: Rng>(h: &HermitianMetric, rng: &mut R, samples: usize) -> Check {
    let n = h.n();
    for _ in 0..samples {
        let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let alpha = random_form(rng, n, p, q);
        let beta = random_form(rng, n, p, q);
        let lhs = alpha.wedge(&h.star(&beta).map_err(err)?).map_err(err)?;
        let rhs = h.volume_form().scale(&h.inner_product(&alpha, &beta).map_err(err)?);
        if lhs != rhs {
            return Err(format!("α∧*β ≠ ⟨α,β⟩vol for α = {alpha}, β = {beta}"));
        }
    }
    Ok(())
}

/// `*(ω^{n−p}∧ψ) = c(n,p)·ψ̄` for every basis (p,0)-form and `1 ≤ p < n`.
pub fn star_of_lefschetz(h: &HermitianMetric, constant: impl Fn(usize, usize) -> Scalar) -> Check {
    let n = h.n();
    for p in 1..n {
        let c = constant(n, p);
        for m in basis(n, p, 0) {
            let psi = unit(n, m);
            let lhs = h.star(&h.lefschetz_power(&psi, n - p).map_err(err)?).map_err(err)?;
            let rhs = psi.conjugate().scale(&c);
            if lhs != rhs {
                return Err(format!("n={n} p={p} ψ={m}: *(ω^{}∧ψ) = {lhs}, expected {rhs}", n - p));
            }
        }
    }
    Ok(())
}

/// `∂*(ω^{n−p}∧ψ) = ∂̄*(ω^{n−p}∧ψ) = 0` for a basis of closed (p,0)-forms.
pub fn delstar_on_closed(s: &StructureEquations, h: &HermitianMetric) -> Check {
    let n = s.n();
    for p in 1..n {
        for psi in crate::analysis::closed_p0_forms(s, p).map_err(err)? {
            let x = h.lefschetz_power(&psi, n - p).map_err(err)?;
            let a = h.del_adjoint(&x, s).map_err(err)?;
            let b = h.delbar_adjoint(&x, s).map_err(err)?;
            if !a.is_zero() || !b.is_zero() {
                return Err(format!("p={p} ψ={psi}: ∂* gives {a}, ∂̄* gives {b}"));
            }
        }
    }
    Ok(())
}

/// `⟪∂a, b⟫ = ⟪a, ∂*b⟫` and the `∂̄` analogue on random pairs.
pub fn adjointness<R: Rng>(s: &StructureEquations, h: &HermitianMetric, rng: &mut R, samples: usize) -> Check {
    let n = s.n();
    for _ in 0..samples {
        let (p, q) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let a = random_form(rng, n, p, q);
        let b1 = random_form(rng, n, p + 1, q);
        let b2 = random_form(rng, n, p, q + 1);
        let l1 = h.l2_pairing(&s.del(&a).map_err(err)?, &b1).map_err(err)?;
        let r1 = h.l2_pairing(&a, &h.del_adjoint(&b1, s).map_err(err)?).map_err(err)?;
        if l1 != r1 {
            return Err(format!("⟪∂a,b⟫ = {l1} but ⟪a,∂*b⟫ = {r1} for a = {a}, b = {b1}"));
        }
        let l2 = h.l2_pairing(&s.delbar(&a).map_err(err)?, &b2).map_err(err)?;
        let r2 = h.l2_pairing(&a, &h.delbar_adjoint(&b2, s).map_err(err)?).map_err(err)?;
        if l2 != r2 {
            return Err(format!("⟪∂̄a,b⟫ = {l2} but ⟪a,∂̄*b⟫ = {r2} for a = {a}, b = {b2}"));
        }
    }
    Ok(())
}

/// `⟨*a, *b⟩ = ⟨b, a⟩` on random pairs.
pub fn star_isometry<R: Rng>(h: &HermitianMetric, rng: &mut R, samples: usize) -> Check {
    let n = h.n();
    for _ in 0..samples {
        let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let a = random_form(rng, n, p, q);
        let b = random_form(rng, n, p, q);
        let lhs = h
            .inner_product(&h.star(&a).map_err(err)?, &h.star(&b).map_err(err)?)
            .map_err(err)?;
        let rhs = h.inner_product(&b, &a).map_err(err)?;
        if lhs != rhs {
            return Err(format!("⟨*a,*b⟩ = {lhs}, ⟨b,a⟩ = {rhs}"));
        }
    }
    Ok(())
}

/// `**a = (−1)^{p+q} a` on random pure forms.
pub fn star_involution<R: Rng>(h: &HermitianMetric, rng: &mut R, samples: usize) -> Check {
    let n = h.n();
    for _ in 0..samples {
        let (p, q) = (rng.gen_range(0..=n), rng.gen_range(0..=n));
        let a = random_form(rng, n, p, q);
        let twice = h.star(&h.star(&a).map_err(err)?).map_err(err)?;
        let expected = if (p + q) % 2 == 0 { a.clone() } else { -a.clone() };
        if twice != expected {
            return Err(format!("**a = {twice} for a = {a}"));
        }
    }
    Ok(())
}

/// `dim H_BC^{p,q} = dim H_A^{n−p,n−q}` for all bidegrees.
pub fn star_duality(s: &StructureEquations) -> Check {
    let n = s.n();
    let c = Cohomology::new(s, None).map_err(err)?;
    for p in 0..=n {
        for q in 0..=n {
            let bc = c.bott_chern(p, q).map_err(err)?.dim;
            let a = c.aeppli(n - p, n - q).map_err(err)?.dim;
            if bc != a {
                return Err(format!(
                    "dim H_BC^({p},{q}) = {bc} but dim H_A^({},{}) = {a}",
                    n - p,
                    n - q
                ));
            }
        }
    }
    Ok(())
}

/// Quotient dimensions agree with both harmonic computations, and the star
/// carries Bott-Chern harmonic forms to Aeppli harmonic forms.
pub fn quotient_vs_harmonic(s: &StructureEquations, h: &HermitianMetric) -> Check {
    let n = s.n();
    let c = Cohomology::new(s, Some(h)).map_err(err)?;
    for p in 0..=n {
        for q in 0..=n {
            for which in [Laplacian::BottChern, Laplacian::Aeppli] {
                let quotient = match which {
                    Laplacian::BottChern => c.bott_chern(p, q),
                    Laplacian::Aeppli => c.aeppli(p, q),
                }
                .map_err(err)?
                .dim;
                let first = c.harmonic_space(which, p, q).map_err(err)?;
                let full = c.laplacian_kernel(which, p, q).map_err(err)?;
                if first.dim() != quotient || first != full {
                    return Err(format!(
                        "{which:?} ({p},{q}): quotient {quotient}, first-order harmonic {}, Laplacian kernel {}",
                        first.dim(),
                        full.dim()
                    ));
                }
            }
            let target = c.harmonic_space(Laplacian::Aeppli, n - p, n - q).map_err(err)?;
            let monos = basis(n, n - p, n - q);
            for u in c.harmonic_forms(Laplacian::BottChern, p, q).map_err(err)? {
                let v = h.star(&u).map_err(err)?;
                if !target.contains(&v.coords(&monos)) {
                    return Err(format!("*{u} is not Aeppli-harmonic"));
                }
            }
        }
    }
    Ok(())
}

/// The Bott-Chern Laplacian matrix is self-adjoint for the Gram product:
/// `Mᵀ G = G M̄`.
pub fn laplacian_self_adjoint(s: &StructureEquations, h: &HermitianMetric) -> Check {
    let n = s.n();
    let c = Cohomology::new(s, Some(h)).map_err(err)?;
    for p in 0..=n {
        for q in 0..=n {
            for op in [Operator::LaplacianBC, Operator::LaplacianA] {
                let m = c.operator_matrix(op, Space::Bidegree(p, q)).map_err(err)?.matrix;
                let g = h.gram(p, q);
                if &m.transpose() * &g != &g * &m.conj() {
                    return Err(format!("{} is not self-adjoint on Λ^({p},{q})", op.name()));
                }
            }
        }
    }
    Ok(())
}

/// `ω^{n−p}∧·` has rank `C(n,p)` on `Λ^{p,0}`.
pub fn lefschetz_rank(h: &HermitianMetric) -> Check {
    let n = h.n();
    for p in 0..=n {
        let src = basis(n, p, 0);
        let dst = basis(n, n, n - p);
        let cols = src
            .iter()
            .map(|&m| h.lefschetz_power(&unit(n, m), n - p).map(|f| f.coords(&dst)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let rank = Matrix::from_columns(dst.len(), &cols).rank();
        if rank != src.len() {
            return Err(format!(
                "rank of ω^{}∧· on Λ^({p},0) is {rank}, expected {}",
                n - p,
                src.len()
            ));
        }
    }
    Ok(())
}

/// `dim H^{p,0}_BC` equals the dimension of closed (p,0)-forms.
pub fn bc_p0_is_closed_forms(s: &StructureEquations) -> Check {
    let c = Cohomology::new(s, None).map_err(err)?;
    for p in 0..=s.n() {
        let bc = c.bott_chern(p, 0).map_err(err)?.dim;
        let closed = crate::analysis::closed_p0_space(s, p).map_err(err)?.dim();
        if bc != closed {
            return Err(format!("p={p}: dim H_BC = {bc}, closed forms {closed}"));
        }
    }
    Ok(())
}

/// Euler characteristic of the invariant de Rham complex is zero in
/// positive dimension.
pub fn de_rham_euler(s: &StructureEquations) -> Check {
    let c = Cohomology::new(s, None).map_err(err)?;
    let mut chi = 0i64;
    for k in 0..=2 * s.n() {
        let d = c.de_rham(k).map_err(err)?.dim as i64;
        chi += if k % 2 == 0 { d } else { -d };
    }
    if chi != 0 {
        return Err(format!("Euler characteristic {chi}"));
    }
    Ok(())
}

/// One recorded expectation of a corpus entry.
pub fn expectation(s: &StructureEquations, h: Option<&HermitianMetric>, e: &Expected) -> Check {
    let need_metric = || h.ok_or_else(|| "expectation needs a metric".to_string());
    let c = Cohomology::new(s, None).map_err(err)?;
    let (what, got, want) = match *e {
        Expected::Flags { flags } => {
            if s.flags() != flags {
                return Err(format!("flags {:?}, expected {flags:?}", s.flags()));
            }
            return Ok(());
        }
        Expected::BottChern { p, q, dim } => (format!("dim H_BC^({p},{q})"), c.bott_chern(p, q).map_err(err)?.dim, dim),
        Expected::Aeppli { p, q, dim } => (format!("dim H_A^({p},{q})"), c.aeppli(p, q).map_err(err)?.dim, dim),
        Expected::Dolbeault { p, q, dim } => (format!("dim H_∂̄^({p},{q})"), c.dolbeault(p, q).map_err(err)?.dim, dim),
        Expected::DeRham { k, dim } => (format!("dim H_dR^{k}"), c.de_rham(k).map_err(err)?.dim, dim),
        Expected::ClosedP0 { p, dim } => (
            format!("closed ({p},0)-forms"),
            closed_p0_space(s, p).map_err(err)?.dim(),
            dim,
        ),
        Expected::AeppliVanishes { p, vanishes } => {
            let got = aeppli_class_vanishes(s, need_metric()?, p).map_err(err)?.vanishes;
            (format!("[ω^{}]_A = 0", s.n() - p), got as usize, vanishes as usize)
        }
        Expected::Kaehler { value } => (
            "Kähler".into(),
            classify_metric(s, need_metric()?).map_err(err)?.kaehler as usize,
            value as usize,
        ),
        Expected::Balanced { value } => (
            "balanced".into(),
            classify_metric(s, need_metric()?).map_err(err)?.balanced as usize,
            value as usize,
        ),
        Expected::Skt { value } => (
            "SKT".into(),
            classify_metric(s, need_metric()?).map_err(err)?.skt as usize,
            value as usize,
        ),
    };
    if got != want {
        return Err(format!("{what}: got {got}, expected {want}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::hodge::lefschetz_star_constant;
    use crate::random::{random_metric, rng};

    #[test]
    fn corpus_passes_structural_checks() {
        let mut r = rng(1);
        for name in corpus::NAMES {
            let s = corpus::load(name).unwrap().equations;
            let h = HermitianMetric::identity(s.n());
            d_squared(&s).unwrap();
            bigraded_identities(&s).unwrap();
            leibniz(&s, &mut r, 10).unwrap();
            star_duality(&s).unwrap();
            delstar_on_closed(&s, &h).unwrap();
            bc_p0_is_closed_forms(&s).unwrap();
            de_rham_euler(&s).unwrap();
            adjointness(&s, &h, &mut r, 5).unwrap();
        }
    }

    #[test]
    fn random_metric_star_checks() {
        let mut r = rng(2);
        let h = random_metric(&mut r, 3);
        star_defining_relation(&h).unwrap();
        star_of_lefschetz(&h, lefschetz_star_constant).unwrap();
        star_isometry(&h, &mut r, 10).unwrap();
        star_involution(&h, &mut r, 10).unwrap();
        lefschetz_rank(&h).unwrap();
    }

    #[test]
    fn corpus_expectations_hold() {
        for entry in corpus::entries() {
            let doc = entry.document().unwrap();
            let h = doc.hermitian_metric().unwrap();
            for e in &entry.expected {
                expectation(&doc.equations, h.as_ref(), &e.value).unwrap_or_else(|m| panic!("{}: {m}", entry.name));
            }
        }
    }

    #[test]
    fn wrong_constant_is_reported() {
        let h = HermitianMetric::identity(2);
        let e = star_of_lefschetz(&h, |_, _| Scalar::from_int(1)).unwrap_err();
        assert!(e.contains("n=2 p=1"), "{e}");
    }

    #[test]
    fn harmonic_cross_check_on_kodaira() {
        let s = corpus::load("kodaira-secondary").unwrap().equations;
        let h = random_metric(&mut rng(4), 2);
        quotient_vs_harmonic(&s, &h).unwrap();
        laplacian_self_adjoint(&s, &h).unwrap();
    }
}
