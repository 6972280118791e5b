//! Gorenstein polytopes, their duals, and checks of the structure theory of
//! thin Gorenstein polytopes.

use serde::Serialize;

use crate::counting::{hstar, lattice_points, EhrhartData};
use crate::error::{Error, Result};
use crate::linalg::{hermite_normal_form, IntMatrix};
use crate::local::{face_data, local_hstar, FaceData};
use crate::polynomial::IntPolynomial;
use crate::polytope::{LatticePolytope, VertexSet};
use crate::poset::g_polynomial;
use crate::scalar::{dot, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct GorensteinData<T: Scalar> {
    pub hstar: IntPolynomial<T>,
    pub degree: usize,
    pub codegree: usize,
    /// The unique interior lattice point of `codegree · P`.
    #[serde(with = "crate::io::ints")]
    pub interior_point: Vec<T>,
    /// Primitive inner facet normals `(a, -b)` of the cone over `P × 1`,
    /// one per facet of `P` in facet order.
    #[serde(with = "crate::io::points")]
    pub cone_normals: Vec<Vec<T>>,
    /// The cone normals in coordinates of the affine lattice
    /// `{y : <y, (p, r)> = 1}`; these are the vertices of the dual.
    #[serde(with = "crate::io::points")]
    pub dual_vertices: Vec<Vec<T>>,
    /// Every cone normal takes the value 1 on `(p, r)`.
    pub certificate: bool,
}

impl<T: Scalar> GorensteinData<T> {
    pub fn dual(&self) -> LatticePolytope<T> {
        LatticePolytope::new(self.dual_vertices.clone()).expect("dual has vertices")
    }
}

fn cone_normals<T: Scalar>(p: &LatticePolytope<T>) -> Vec<Vec<T>> {
    p.facets()
        .iter()
        .map(|f| {
            let mut y = f.normal.clone();
            y.push(-f.offset.clone());
            y
        })
        .collect()
}

fn certifies<T: Scalar>(normals: &[Vec<T>], m: &[T]) -> bool {
    normals.iter().all(|y| dot(y, m).is_one())
}

fn palindromic_at_degree<T: Scalar>(h: &IntPolynomial<T>) -> bool {
    h.is_palindromic(h.degree())
}

/// Gorenstein data of `P`, or [`Error::NotGorenstein`]. Palindromy of `h*`
/// and the cone-normal certificate are computed independently; if they
/// disagree the result is [`Error::InternalConsistency`].
pub fn gorenstein_data<T: Scalar>(p: &LatticePolytope<T>) -> Result<GorensteinData<T>> {
    gorenstein_data_with(p, hstar(p))
}

fn gorenstein_data_with<T: Scalar>(
    p: &LatticePolytope<T>,
    ehr: EhrhartData<T>,
) -> Result<GorensteinData<T>> {
    let d = p.dim();
    let palindromic = palindromic_at_degree(&ehr.hstar);
    let r = ehr.codegree;
    let normals = cone_normals(p);
    let interior = lattice_points(p, &T::from_count(r), true);
    let witness = interior.iter().find(|x| {
        let mut m = (*x).clone();
        m.push(T::from_count(r));
        d == 0 || certifies(&normals, &m)
    });
    match (palindromic, witness) {
        (false, None) => return Err(Error::NotGorenstein),
        (true, Some(_)) if interior.len() == 1 => {}
        _ => return Err(Error::InternalConsistency(format!(
            "palindromic h* = {} disagrees with the cone certificate ({} interior points of {}P)",
            ehr.hstar,
            interior.len(),
            r
        ))),
    }
    let point = interior[0].clone();
    let mut m = point.clone();
    m.push(T::from_count(r));

    // Unimodular U with U m = e_k; then <y, m> = (U^{-T} y)_k.
    let col = IntMatrix::from_rows(m.iter().map(|x| vec![x.clone()]).collect(), 1)?;
    let hf = hermite_normal_form(&col);
    let k = (0..=d)
        .find(|&i| !hf.h[(i, 0)].is_zero())
        .expect("m is nonzero");
    if !hf.h[(k, 0)].is_one() {
        return Err(Error::InternalConsistency(
            "interior point of the cone is not primitive".into(),
        ));
    }
    let u_inv_t = hf.u.unimodular_inverse()?.transpose();
    let dual_vertices = normals
        .iter()
        .map(|y| {
            let z = u_inv_t.mul_vec(y);
            debug_assert!(z[k].is_one());
            z.into_iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, x)| x)
                .collect()
        })
        .collect();
    Ok(GorensteinData {
        degree: ehr.degree,
        codegree: r,
        hstar: ehr.hstar,
        interior_point: point,
        certificate: true,
        cone_normals: normals,
        dual_vertices,
    })
}

pub fn is_gorenstein<T: Scalar>(p: &LatticePolytope<T>) -> bool {
    palindromic_at_degree(&hstar(p).hstar)
}

/// The dual Gorenstein polytope, up to unimodular equivalence.
pub fn dual_polytope<T: Scalar>(p: &LatticePolytope<T>) -> Result<LatticePolytope<T>> {
    if p.dim() == 0 {
        return Err(Error::Invalid("a point has no dual polytope".into()));
    }
    Ok(gorenstein_data(p)?.dual())
}

/// The face of the dual spanned by the normals of the facets containing `face`.
pub fn dual_face<T: Scalar>(p: &LatticePolytope<T>, face: VertexSet) -> VertexSet {
    VertexSet::from_indices(
        (0..p.facets().len()).filter(|&i| face.is_subset(p.facets()[i].vertices)),
    )
}

/// `deg g_P = deg P`.
pub fn is_g_thin<T: Scalar>(p: &LatticePolytope<T>) -> bool {
    g_polynomial(p).degree() == hstar(p).degree
}

pub fn is_cayley_join<T: Scalar>(p: &LatticePolytope<T>, f: VertexSet, g: VertexSet) -> bool {
    p.is_cayley_join(f, g)
}

/// A Cayley join of a Gorenstein polytope is a Gorenstein join iff the
/// codegrees of the factors add up.
pub fn is_gorenstein_join<T: Scalar>(
    p: &LatticePolytope<T>,
    f: VertexSet,
    g: VertexSet,
) -> Result<bool> {
    if !is_gorenstein(p) {
        return Err(Error::NotGorenstein);
    }
    if !p.is_cayley_join(f, g) {
        return Err(Error::NotACayleyJoin);
    }
    let codeg = |s: VertexSet| p.face_polytope(s).map(|q| hstar(&q).codegree);
    Ok(hstar(p).codegree == codeg(f)? + codeg(g)?)
}

/// All Gorenstein joins `(F, G)` of a Gorenstein polytope, each unordered
/// pair once.
pub fn gorenstein_joins<T: Scalar>(p: &LatticePolytope<T>) -> Vec<(VertexSet, VertexSet)> {
    p.cayley_joins()
        .into_iter()
        .filter(|&(f, g)| is_gorenstein_join(p, f, g).unwrap_or(false))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct DualCheck<T: Scalar> {
    pub lstar: IntPolynomial<T>,
    pub dual_lstar: IntPolynomial<T>,
    /// `P` thin iff the dual is thin.
    pub thin_duality: bool,
    /// `deg l*_P = deg l*` of the dual.
    pub degree_duality: bool,
    /// Same dimension and degree.
    pub invariants_preserved: bool,
}

impl<T: Scalar> DualCheck<T> {
    pub fn holds(&self) -> bool {
        self.thin_duality && self.degree_duality && self.invariants_preserved
    }
}

pub fn dual_lstar_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<DualCheck<T>> {
    let dual = dual_polytope(p)?;
    let (a, b) = (local_hstar(p)?, local_hstar(&dual)?);
    Ok(DualCheck {
        thin_duality: a.is_thin == b.is_thin,
        degree_duality: a.lstar.degree() == b.lstar.degree(),
        invariants_preserved: p.dim() == dual.dim() && a.hstar.degree() == b.hstar.degree(),
        lstar: a.lstar,
        dual_lstar: b.lstar,
    })
}

/// Degrees and thinness data of one face, as a polytope in its own lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSummary {
    pub dim: usize,
    pub degree: usize,
    pub lstar_degree: Option<usize>,
    pub g_degree: usize,
    pub trivially_thin: bool,
    pub g_thin: bool,
}

fn factor_summary<T: Scalar>(
    p: &LatticePolytope<T>,
    fd: &FaceData<T>,
    face: VertexSet,
) -> FactorSummary {
    let fl = p.face_lattice();
    let idx = fl.index_of(face).expect("face of P");
    let q = p.face_polytope(face).expect("nonempty face");
    let degree = fd.hstar(idx).degree();
    let g_degree = g_polynomial(&q).degree();
    let l = &fd.lstar[idx];
    FactorSummary {
        dim: q.dim(),
        degree,
        lstar_degree: (!l.is_zero()).then(|| l.degree()),
        g_degree,
        trivially_thin: q.dim() >= 2 * degree,
        g_thin: g_degree == degree,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinWitness {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub first_summary: FactorSummary,
    pub second_summary: FactorSummary,
}

/// Evaluation of the three equivalent conditions for thinness of a
/// Gorenstein polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheoremVerdict {
    /// (i) `l* = 0`.
    pub thin: bool,
    pub trivially_thin: bool,
    pub g_thin: bool,
    pub gorenstein_joins: Vec<JoinWitness>,
    /// (ii) trivially thin, or a Gorenstein join with a trivially thin factor.
    pub trivially_thin_condition: bool,
    /// (iii) g-thin, or a Gorenstein join `F * G` with `deg l*_F = deg F`
    /// and `G` g-thin.
    pub g_thin_condition: bool,
    /// Not thin implies `deg l* = deg P`.
    pub degree_law: bool,
    /// For thin polytopes that are not trivially thin: whether some join
    /// decomposition is a free join.
    pub free_join_witness: Option<bool>,
}

impl MainTheoremVerdict {
    pub fn consistent(&self) -> bool {
        self.thin == self.trivially_thin_condition
            && self.thin == self.g_thin_condition
            && self.degree_law
    }
}

/// Evaluates the three conditions independently and fails with
/// [`Error::Falsification`] if they are not equivalent.
pub fn theorem_main_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<MainTheoremVerdict> {
    let ehr = hstar(p);
    gorenstein_data_with(p, ehr.clone())?;
    let fd = face_data(p);
    let fl = p.face_lattice();
    let lstar = fd.lstar[fl.top()].clone();
    let thin = lstar.is_zero();
    let trivially_thin = p.dim() >= 2 * ehr.degree;
    let g_thin = g_polynomial(p).degree() == ehr.degree;

    let joins: Vec<JoinWitness> = gorenstein_joins(p)
        .into_iter()
        .map(|(f, g)| JoinWitness {
            first: f.to_vec(),
            second: g.to_vec(),
            first_summary: factor_summary(p, &fd, f),
            second_summary: factor_summary(p, &fd, g),
        })
        .collect();
    let trivially_thin_condition = trivially_thin
        || joins
            .iter()
            .any(|j| j.first_summary.trivially_thin || j.second_summary.trivially_thin);
    let full_local = |s: &FactorSummary| s.lstar_degree == Some(s.degree);
    let g_thin_condition = g_thin
        || joins.iter().any(|j| {
            (full_local(&j.first_summary) && j.second_summary.g_thin)
                || (full_local(&j.second_summary) && j.first_summary.g_thin)
        });
    let degree_law = thin || lstar.degree() == ehr.degree;
    let free_join_witness = (thin && !trivially_thin).then(|| p.find_free_join().is_some());
    let verdict = MainTheoremVerdict {
        thin,
        trivially_thin,
        g_thin,
        gorenstein_joins: joins,
        trivially_thin_condition,
        g_thin_condition,
        degree_law,
        free_join_witness,
    };
    if !verdict.consistent() {
        return Err(Error::Falsification(format!(
            "thin Gorenstein characterization fails: {verdict:?}"
        )));
    }
    Ok(verdict)
}

/// Either `l* = 0`, or `l*` starts with `t^r` (coefficient 1) and ends in
/// degree `deg P` with leading coefficient 1.
pub fn subdegree_law_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    let g = gorenstein_data(p)?;
    let l = local_hstar(p)?.lstar;
    Ok(l.is_zero()
        || (l.subdegree() == Some(g.codegree)
            && l.coeff(g.codegree).is_one()
            && l.degree() == g.degree
            && l.leading_coeff().is_one()))
}

/// For a Gorenstein simplex: thin iff lattice pyramid.
pub fn gorenstein_simplex_check<T: Scalar>(s: &LatticePolytope<T>) -> Result<bool> {
    s.require_simplex()?;
    gorenstein_data(s)?;
    Ok(local_hstar(s)?.is_thin == s.is_lattice_pyramid())
}

/// `codeg P ≤ codeg F + codeg F*` for every nonempty proper face `F`.
pub fn dual_face_codegree_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    let data = gorenstein_data(p)?;
    let dual = data.dual();
    let fl = p.face_lattice();
    for f in fl
        .faces()
        .iter()
        .filter(|f| f.dim >= 0 && f.vertices != p.all_vertices())
    {
        let fp = p.face_polytope(f.vertices)?;
        let fstar = dual.face_polytope(dual_face(p, f.vertices))?;
        if data.codegree > hstar(&fp).codegree + hstar(&fstar).codegree {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every join `P = F ∘ G`: `l*_F l*_G ≤ l*_P` and `h*_F h*_G ≤ h*_P`.
pub fn join_inequalities_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    let fd = face_data(p);
    let fl = p.face_lattice();
    let top = fl.top();
    for (f, g) in p.joins() {
        let (fi, gi) = (fl.index_of(f).expect("face"), fl.index_of(g).expect("face"));
        if !(&fd.lstar[fi] * &fd.lstar[gi]).le_coefficientwise(&fd.lstar[top])
            || !(&fd.hstar(fi) * &fd.hstar(gi)).le_coefficientwise(&fd.hstar(top))
        {
            return Ok(false);
        }
    }
    Ok(true)
}
