//! Projective hypersurfaces, points, linear subspaces and transforms.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::absolutely_irreducible;
use crate::algebra::field::{embed, Elem, Embedding, FieldDesc};
use crate::algebra::linalg::{self, Matrix};
use crate::algebra::multipoly::{Mono, MultiPoly};
use crate::algebra::parse::format_point;
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Upper bound on enumerated points in any single enumeration.
pub const ENUMERATION_CAP: u64 = 20_000_000;

/// A point of projective space, first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjPoint {
    field: FieldDesc,
    coords: Vec<Elem>,
}

impl std::hash::Hash for ProjPoint {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.coords.hash(h)
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, o: &Self) -> Ordering {
        self.coords.cmp(&o.coords)
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_point(&self.field, &self.coords))
    }
}

impl ProjPoint {
    pub fn new(field: &FieldDesc, coords: Vec<Elem>) -> Result<Self> {
        let Some(&lead) = coords.iter().find(|&&c| c != 0) else {
            return Err(Error::precondition(
                "zero_vector",
                "all coordinates are zero",
            ));
        };
        let inv = field.inv(lead).unwrap();
        let coords = coords.into_iter().map(|c| field.mul(c, inv)).collect();
        Ok(ProjPoint {
            field: field.clone(),
            coords,
        })
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coords(&self) -> &[Elem] {
        &self.coords
    }

    /// Number of homogeneous coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn embed(&self, e: &Embedding) -> ProjPoint {
        ProjPoint {
            field: e.dst().clone(),
            coords: self.coords.iter().map(|&c| e.map(c)).collect(),
        }
    }

    /// Preimage under an embedding, when every coordinate lies in the image.
    pub fn preimage(&self, e: &Embedding) -> Option<ProjPoint> {
        let coords: Option<Vec<Elem>> = self.coords.iter().map(|&c| e.preimage(c)).collect();
        Some(ProjPoint {
            field: e.src().clone(),
            coords: coords?,
        })
    }
}

/// All points of `P^(len-1)` over `field`, in ascending coordinate order.
pub fn projective_points(field: &FieldDesc, len: usize) -> Result<Vec<ProjPoint>> {
    let q = field.size();
    let total = (0..len as u32).try_fold(0u64, |acc, i| acc.checked_add(q.checked_pow(i)?));
    match total {
        Some(t) if t <= ENUMERATION_CAP => {}
        _ => {
            return Err(Error::Cap(format!(
                "projective space of dimension {} over {} is too large",
                len - 1,
                field
            )))
        }
    }
    let mut out = Vec::new();
    for lead in (0..len).rev() {
        let tail = len - lead - 1;
        let count = q.pow(tail as u32);
        for code in 0..count {
            let mut v = vec![0; len];
            v[lead] = 1;
            let mut c = code;
            for i in (lead + 1..len).rev() {
                v[i] = c % q;
                c /= q;
            }
            out.push(ProjPoint {
                field: field.clone(),
                coords: v,
            });
        }
    }
    Ok(out)
}

/// Linear subspace of projective space, stored as a reduced spanning basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearSubspace {
    field: FieldDesc,
    ambient: usize,
    basis: Matrix,
}

impl fmt::Debug for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LinearSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "{{}}");
        }
        let eqs = self.equations();
        if eqs.is_empty() {
            return write!(f, "P^{}", self.ambient - 1);
        }
        let forms: Vec<String> = eqs
            .iter()
            .map(|e| linear_form(&self.field, e).to_string())
            .collect();
        write!(f, "{{{} = 0}}", forms.join(" = "))
    }
}

/// The linear form `Σ c_i X_i`.
pub fn linear_form(field: &FieldDesc, c: &[Elem]) -> MultiPoly {
    let n = c.len();
    MultiPoly::from_terms(
        field,
        n,
        c.iter().enumerate().map(|(i, &a)| (Mono::var(i), a)),
    )
}

impl LinearSubspace {
    pub fn from_vectors(field: &FieldDesc, ambient: usize, vecs: &[Vec<Elem>]) -> Self {
        let (m, piv) = linalg::rref(field, &vecs.to_vec());
        let basis = m.into_iter().take(piv.len()).collect();
        LinearSubspace {
            field: field.clone(),
            ambient,
            basis,
        }
    }

    pub fn from_points(field: &FieldDesc, ambient: usize, pts: &[ProjPoint]) -> Self {
        let v: Vec<Vec<Elem>> = pts.iter().map(|p| p.coords.clone()).collect();
        Self::from_vectors(field, ambient, &v)
    }

    /// Common zero set of the given linear forms (coefficient rows).
    pub fn from_equations(field: &FieldDesc, ambient: usize, eqs: &[Vec<Elem>]) -> Self {
        let k = linalg::kernel(field, &eqs.to_vec(), ambient);
        Self::from_vectors(field, ambient, &k)
    }

    pub fn empty(field: &FieldDesc, ambient: usize) -> Self {
        LinearSubspace {
            field: field.clone(),
            ambient,
            basis: vec![],
        }
    }

    pub fn whole(field: &FieldDesc, ambient: usize) -> Self {
        Self::from_vectors(field, ambient, &linalg::identity(ambient))
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Projective dimension; `-1` when empty.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Reduced basis of linear forms cutting out the subspace.
    pub fn equations(&self) -> Matrix {
        if self.basis.is_empty() {
            return linalg::identity(self.ambient);
        }
        let k = linalg::kernel(&self.field, &self.basis, self.ambient);
        let (m, piv) = linalg::rref(&self.field, &k);
        m.into_iter().take(piv.len()).collect()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.equations()
            .iter()
            .all(|e| dot(&self.field, e, &p.coords) == 0)
    }

    pub fn contains_subspace(&self, o: &LinearSubspace) -> bool {
        let eqs = self.equations();
        o.basis
            .iter()
            .all(|v| eqs.iter().all(|e| dot(&self.field, e, v) == 0))
    }

    pub fn span(&self, o: &LinearSubspace) -> LinearSubspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Self::from_vectors(&self.field, self.ambient, &v)
    }

    pub fn intersect(&self, o: &LinearSubspace) -> LinearSubspace {
        let mut e = self.equations();
        e.extend(o.equations());
        Self::from_equations(&self.field, self.ambient, &e)
    }

    /// Image under `M`.
    pub fn transform(&self, m: &ProjTransform) -> LinearSubspace {
        let v: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|b| linalg::mat_vec(&self.field, &m.m, b))
            .collect();
        Self::from_vectors(&self.field, self.ambient, &v)
    }

    pub fn embed(&self, e: &Embedding) -> LinearSubspace {
        let v: Vec<Vec<Elem>> = self
            .basis
            .iter()
            .map(|b| b.iter().map(|&c| e.map(c)).collect())
            .collect();
        Self::from_vectors(e.dst(), self.ambient, &v)
    }

    /// All points, in ascending order.
    pub fn points(&self) -> Result<Vec<ProjPoint>> {
        let r = self.basis.len();
        if r == 0 {
            return Ok(vec![]);
        }
        let coeffs = projective_points(&self.field, r)?;
        let mut out: Vec<ProjPoint> = coeffs
            .iter()
            .map(|c| {
                let mut v = vec![0; self.ambient];
                for (ci, b) in c.coords.iter().zip(&self.basis) {
                    for (x, &bj) in v.iter_mut().zip(b) {
                        *x = self.field.add(*x, self.field.mul(*ci, bj));
                    }
                }
                ProjPoint::new(&self.field, v).unwrap()
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

fn dot(f: &FieldDesc, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Invertible square matrix up to scalars, first nonzero entry equal to 1.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjTransform {
    field: FieldDesc,
    m: Matrix,
}

impl fmt::Debug for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ProjTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|&a| self.field.format(a))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

impl ProjTransform {
    pub fn new(field: &FieldDesc, m: Matrix) -> Result<Self> {
        let n = m.len();
        if n == 0 || m.iter().any(|r| r.len() != n) {
            return Err(Error::precondition(
                "bad_matrix",
                "transform must be a nonempty square matrix",
            ));
        }
        if linalg::determinant(field, &m) == 0 {
            return Err(Error::SingularMatrix);
        }
        let lead = *m.iter().flatten().find(|&&a| a != 0).unwrap();
        let inv = field.inv(lead).unwrap();
        let m = m
            .into_iter()
            .map(|r| r.into_iter().map(|a| field.mul(a, inv)).collect())
            .collect();
        Ok(ProjTransform {
            field: field.clone(),
            m,
        })
    }

    pub fn identity(field: &FieldDesc, n: usize) -> Self {
        ProjTransform {
            field: field.clone(),
            m: linalg::identity(n),
        }
    }

    /// Uniformly random invertible matrix.
    pub fn random<R: Rng + ?Sized>(field: &FieldDesc, n: usize, rng: &mut R) -> Self {
        loop {
            let m: Matrix = (0..n)
                .map(|_| (0..n).map(|_| field.random(rng)).collect())
                .collect();
            if let Ok(t) = Self::new(field, m) {
                return t;
            }
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m == linalg::identity(self.m.len())
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::new(
            &self.field,
            linalg::mat_vec(&self.field, &self.m, &p.coords),
        )
        .unwrap()
    }

    /// `self · o`.
    pub fn compose(&self, o: &ProjTransform) -> ProjTransform {
        ProjTransform::new(&self.field, linalg::mat_mul(&self.field, &self.m, &o.m)).unwrap()
    }

    pub fn inverse(&self) -> ProjTransform {
        ProjTransform::new(&self.field, linalg::inverse(&self.field, &self.m).unwrap()).unwrap()
    }

    pub fn embed(&self, e: &Embedding) -> ProjTransform {
        let m = self
            .m
            .iter()
            .map(|r| r.iter().map(|&a| e.map(a)).collect())
            .collect();
        ProjTransform {
            field: e.dst().clone(),
            m,
        }
    }

    /// Images `X_i -> Σ_j M_ij X_j` as linear forms in `nvars` variables.
    fn images(&self, nvars: usize) -> Vec<MultiPoly> {
        self.m
            .iter()
            .map(|r| {
                MultiPoly::from_terms(
                    &self.field,
                    nvars,
                    r.iter().enumerate().map(|(j, &a)| (Mono::var(j), a)),
                )
            })
            .collect()
    }
}

/// `F(M·X)`. Vanishes at `P` iff `F` vanishes at `M·P`, and
/// `substitute_linear(F, M·N) = substitute_linear(substitute_linear(F, M), N)`.
pub fn substitute_linear(f: &MultiPoly, m: &ProjTransform) -> Result<MultiPoly> {
    if f.nvars() != m.size() {
        return Err(Error::precondition(
            "dimension_mismatch",
            "matrix size differs from the number of variables",
        ));
    }
    if !f.field().same(&m.field) {
        return Err(Error::FieldMismatch);
    }
    Ok(f.substitute(&m.images(f.nvars())))
}

/// A point returned by sampling, with its smoothness flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledPoint {
    pub point: ProjPoint,
    pub smooth: bool,
}

/// `V(F) ⊂ P^(n+1)`.
pub struct Hypersurface {
    f: MultiPoly,
    integral: OnceLock<bool>,
}

impl Clone for Hypersurface {
    fn clone(&self) -> Self {
        let integral = OnceLock::new();
        if let Some(&b) = self.integral.get() {
            let _ = integral.set(b);
        }
        Hypersurface {
            f: self.f.clone(),
            integral,
        }
    }
}

impl fmt::Debug for Hypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Hypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::algebra::parse::format_poly(&self.f))
    }
}

impl Hypersurface {
    pub fn new(f: MultiPoly) -> Result<Self> {
        if f.nvars() < 2 {
            return Err(Error::precondition(
                "too_few_variables",
                "need at least two homogeneous variables",
            ));
        }
        if f.total_degree() < 1 || !f.is_homogeneous() {
            return Err(Error::precondition(
                "not_homogeneous",
                "defining form must be homogeneous of positive degree",
            ));
        }
        Ok(Hypersurface {
            f,
            integral: OnceLock::new(),
        })
    }

    fn with_flag(f: MultiPoly, flag: Option<bool>) -> Self {
        let integral = OnceLock::new();
        if let Some(b) = flag {
            let _ = integral.set(b);
        }
        Hypersurface { f, integral }
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.f
    }

    pub fn field(&self) -> &FieldDesc {
        self.f.field()
    }

    /// Dimension `n`.
    pub fn dim(&self) -> usize {
        self.f.nvars() - 2
    }

    pub fn degree(&self) -> usize {
        self.f.total_degree() as usize
    }

    pub fn nvars(&self) -> usize {
        self.f.nvars()
    }

    /// Same equation over a larger constant field. Integrality is geometric, so
    /// a cached verdict carries over.
    pub fn base_change(&self, e: &Embedding) -> Hypersurface {
        Self::with_flag(self.f.embed(e), self.integral.get().copied())
    }

    /// Base change to `GF(q^m)`.
    pub fn extend(&self, m: u32) -> Result<(Hypersurface, Embedding)> {
        let big = self.field().extension(m)?;
        let e = embed(self.field(), &big)?;
        Ok((self.base_change(&e), e))
    }

    /// `X∘M`, i.e. the hypersurface `M^{-1}(X)`.
    pub fn transform(&self, m: &ProjTransform) -> Result<Hypersurface> {
        Ok(Self::with_flag(
            substitute_linear(&self.f, m)?,
            self.integral.get().copied(),
        ))
    }

    fn check_point(&self, p: &ProjPoint) -> Result<()> {
        if p.len() != self.nvars() {
            return Err(Error::precondition(
                "dimension_mismatch",
                "point has the wrong number of coordinates",
            ));
        }
        if !p.field().same(self.field()) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn eval(&self, p: &ProjPoint) -> Result<Elem> {
        self.check_point(p)?;
        Ok(self.f.eval(&p.coords))
    }

    pub fn contains(&self, p: &ProjPoint) -> Result<bool> {
        Ok(self.eval(p)? == 0)
    }

    /// Reduced and absolutely irreducible.
    pub fn is_integral(&self) -> Result<bool> {
        if let Some(&b) = self.integral.get() {
            return Ok(b);
        }
        let b = absolutely_irreducible(&self.f, 0)?;
        let _ = self.integral.set(b);
        Ok(b)
    }

    pub fn require_integral(&self) -> Result<()> {
        if self.is_integral()? {
            Ok(())
        } else {
            Err(Error::precondition(
                "not_integral",
                format!("{} is not reduced and absolutely irreducible", self),
            ))
        }
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.f.partial(i)).collect()
    }

    pub fn gradient_at(&self, p: &ProjPoint) -> Result<Vec<Elem>> {
        self.check_point(p)?;
        Ok(self.gradient().iter().map(|g| g.eval(&p.coords)).collect())
    }

    /// Singular iff every first partial vanishes at `P`. Requires `P ∈ X`.
    pub fn singular_at(&self, p: &ProjPoint) -> Result<bool> {
        if !self.contains(p)? {
            return Err(Error::precondition(
                "not_on_hypersurface",
                format!("{p} is not on X"),
            ));
        }
        Ok(self.gradient_at(p)?.iter().all(|&c| c == 0))
    }

    pub fn tangent_space(&self, p: &ProjPoint) -> Result<LinearSubspace> {
        let g = self.gauss_map(p)?;
        Ok(LinearSubspace::from_equations(
            self.field(),
            self.nvars(),
            &[g.coords],
        ))
    }

    /// Tangent hyperplane at a smooth point, as a point of the dual space.
    pub fn gauss_map(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if self.singular_at(p)? {
            return Err(Error::precondition(
                "singular_point",
                format!("{p} is a singular point of X"),
            ));
        }
        ProjPoint::new(self.field(), self.gradient_at(p)?)
    }

    /// Kernel of `Q -> Σ Q_i ∂F/∂X_i`, read coefficientwise.
    fn gradient_kernel(&self) -> Matrix {
        let grad = self.gradient();
        let monos: BTreeSet<Mono> = grad
            .iter()
            .flat_map(|g| g.terms().iter().map(|t| t.0))
            .collect();
        let rows: Matrix = monos
            .iter()
            .map(|m| grad.iter().map(|g| g.coeff(m)).collect())
            .collect();
        linalg::kernel(self.field(), &rows, self.nvars())
    }

    /// Intersection of the tangent hyperplanes at all smooth points.
    ///
    /// On an integral hypersurface of degree `d`, `Σ Q_i ∂F/∂X_i` has degree
    /// `d-1` and vanishes on `X` exactly when it is the zero polynomial, so
    /// `Q` lies on every tangent hyperplane iff it is in the kernel.
    pub fn strange_center(&self) -> Result<LinearSubspace> {
        self.require_integral()?;
        Ok(LinearSubspace::from_vectors(
            self.field(),
            self.nvars(),
            &self.gradient_kernel(),
        ))
    }

    /// Whether `F(X + tV) = F(X)` identically.
    pub fn translation_invariant(&self, v: &[Elem]) -> bool {
        let n = self.nvars();
        let fld = self.field();
        let t = MultiPoly::var(fld, n + 1, n);
        let lifted = self.f.with_nvars(n + 1);
        let subs: Vec<MultiPoly> = (0..n)
            .map(|i| MultiPoly::var(fld, n + 1, i).add(&t.scale(v[i])))
            .chain([t.clone()])
            .collect();
        lifted.substitute(&subs) == lifted
    }

    /// Largest linear space `V` with `F(X + tV) = F(X)`. The set of such `V` is
    /// a subspace stable under Frobenius, hence spanned by rational points, and
    /// contained in the gradient kernel; the candidates are the rational points
    /// of that kernel.
    pub fn cone_vertex(&self) -> Result<LinearSubspace> {
        let fld = self.field();
        let k1 = LinearSubspace::from_vectors(fld, self.nvars(), &self.gradient_kernel());
        let passing: Vec<ProjPoint> = k1
            .points()
            .map_err(|_| Error::Inconclusive("cone vertex enumeration cap exceeded".into()))?
            .into_iter()
            .filter(|p| self.translation_invariant(&p.coords))
            .collect();
        let v = LinearSubspace::from_points(fld, self.nvars(), &passing);
        if !v.basis.iter().all(|b| self.translation_invariant(b)) {
            return Err(Error::Internal(
                "cone vertex basis failed certification".into(),
            ));
        }
        Ok(v)
    }

    /// Section by the hyperplane `H`. The chart `M` has columns `e_i`
    /// (`i ≠ j`, ascending) followed by `e_j`, adjusted so that `M·(Y, 0)`
    /// lies on `H`; `j` is the largest index with a nonzero coefficient.
    pub fn hyperplane_section(&self, h: &LinearSubspace) -> Result<(Hypersurface, ProjTransform)> {
        let eqs = h.equations();
        if eqs.len() != 1 || h.ambient() != self.nvars() {
            return Err(Error::precondition(
                "not_a_hyperplane",
                "expected a hyperplane of the ambient space",
            ));
        }
        let e = &eqs[0];
        let fld = self.field();
        let n2 = self.nvars();
        let j = (0..n2).rev().find(|&i| e[i] != 0).unwrap();
        let inv = fld.inv(e[j]).unwrap();
        let mut m = vec![vec![0; n2]; n2];
        let others: Vec<usize> = (0..n2).filter(|&i| i != j).collect();
        for (col, &i) in others.iter().enumerate() {
            m[i][col] = 1;
            m[j][col] = fld.neg(fld.mul(e[i], inv));
        }
        m[j][n2 - 1] = 1;
        let chart = ProjTransform::new(fld, m)?;
        let g = substitute_linear(&self.f, &chart)?.eval_var(n2 - 1, 0);
        if g.is_zero() {
            return Err(Error::precondition(
                "contained_in_hyperplane",
                "X lies in H",
            ));
        }
        let map: Vec<usize> = (0..n2).map(|i| i.min(n2 - 2)).collect();
        let g = g.remap_vars(n2 - 1, &map);
        Ok((Hypersurface::new(g)?, chart))
    }

    /// Random points over `GF(q^m)`, reproducible for a given seed.
    pub fn sample_points(
        &self,
        m: u32,
        count: usize,
        seed: u64,
    ) -> Result<(Hypersurface, Vec<SampledPoint>)> {
        let (x, _) = self.extend(m)?;
        let fld = x.field().clone();
        let n2 = x.nvars();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let cap = 200 * count + 1000;
        let mut trials = 0;
        while out.len() < count {
            trials += 1;
            if trials > cap {
                return Err(Error::Cap(format!(
                    "found only {} of {} points",
                    out.len(),
                    count
                )));
            }
            let a: Vec<Elem> = (0..n2 - 1).map(|_| fld.random(&mut rng)).collect();
            let u = line_restriction(&x.f, &a);
            let roots = if u.is_zero() {
                vec![fld.random(&mut rng)]
            } else {
                u.roots(rng.gen())
            };
            if roots.is_empty() {
                continue;
            }
            let r = roots[rng.gen_range(0..roots.len())];
            let mut v = a;
            v.push(r);
            let Ok(p) = ProjPoint::new(&fld, v) else {
                continue;
            };
            if seen.insert(p.clone()) {
                let smooth = !x.singular_at(&p)?;
                out.push(SampledPoint { point: p, smooth });
            }
        }
        Ok((x, out))
    }

    /// Every point of `X` over its own field, ascending.
    pub fn rational_points(&self) -> Result<Vec<ProjPoint>> {
        let fld = self.field();
        let n2 = self.nvars();
        let mut out = Vec::new();
        // points with last coordinate free: solve along lines
        for prefix in projective_points(fld, n2 - 1)? {
            let u = line_restriction(&self.f, &prefix.coords);
            let roots: Vec<Elem> = if u.is_zero() {
                fld.elements().collect()
            } else {
                u.roots(0)
            };
            for r in roots {
                let mut v = prefix.coords.clone();
                v.push(r);
                out.push(ProjPoint {
                    field: fld.clone(),
                    coords: v,
                });
            }
        }
        let last = ProjPoint::new(fld, (0..n2).map(|i| (i == n2 - 1) as Elem).collect())?;
        if self.contains(&last)? {
            out.push(last);
        }
        out.sort();
        Ok(out)
    }
}

/// `T -> F(a_0, ..., a_{n}, T)`.
fn line_restriction(f: &MultiPoly, a: &[Elem]) -> UniPoly {
    let mut g = f.clone();
    for (i, &c) in a.iter().enumerate() {
        g = g.eval_var(i, c);
    }
    g.to_unipoly(a.len())
        .unwrap_or_else(|| UniPoly::zero(f.field()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;
    use crate::algebra::parse::parse_poly;

    fn hs(s: &str) -> Hypersurface {
        Hypersurface::new(parse_poly(s, None).unwrap().poly).unwrap()
    }

    fn pt(x: &Hypersurface, c: &[Elem]) -> ProjPoint {
        ProjPoint::new(x.field(), c.to_vec()).unwrap()
    }

    #[test]
    fn cusp_tangent_and_singular() {
        let x = hs("X0^2*X1 - X2^3 over GF(3)");
        assert!(x.is_integral().unwrap());
        assert!(x.singular_at(&pt(&x, &[0, 1, 0])).unwrap());
        let p = pt(&x, &[1, 1, 1]);
        assert!(!x.singular_at(&p).unwrap());
        assert_eq!(x.gauss_map(&p).unwrap().coords(), &[1, 2, 0]);
        assert!(x.tangent_space(&pt(&x, &[1, 0, 1])).is_err());
        let t = x.strange_center().unwrap();
        assert_eq!(t.dim(), 0);
        assert!(t.contains(&pt(&x, &[0, 0, 1])));
        assert!(x.cone_vertex().unwrap().is_empty());
    }

    #[test]
    fn strange_conic_and_cone() {
        let c = hs("X1^2 + X0*X2 over GF(2)");
        assert_eq!(
            c.strange_center().unwrap().points().unwrap(),
            vec![pt(&c, &[0, 1, 0])]
        );
        let s = hs("X0*X2 - X1^2 over GF(5)");
        assert!(s.strange_center().unwrap().is_empty());
        let q = hs("X0^3*X1 - X2^4 over GF(2) in P^3");
        let v = q.cone_vertex().unwrap();
        assert_eq!(v.points().unwrap(), vec![pt(&q, &[0, 0, 0, 1])]);
        let t = q.strange_center().unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.contains_subspace(&v));
    }

    #[test]
    fn sections_and_points() {
        let q = hs("X0^3*X1 - X2^4 over GF(2) in P^3");
        let f = q.field().clone();
        let h = LinearSubspace::from_equations(&f, 4, &[vec![0, 0, 1, 1]]);
        let (s, chart) = q.hyperplane_section(&h).unwrap();
        assert_eq!(
            s.poly(),
            &q.poly().eval_var(3, 0).remap_vars(3, &[0, 1, 2, 2])
        );
        assert!(chart.apply(&pt(&q, &[0, 0, 1, 0])).coords() == [0, 0, 1, 1]);
        let x = hs("X0^2*X1 - X2^3 over GF(3)");
        let pts = x.rational_points().unwrap();
        assert_eq!(pts.len(), 4);
        assert!(pts.contains(&pt(&x, &[1, 1, 1])));
        let (x9, s1) = x.sample_points(2, 5, 7).unwrap();
        let (_, s2) = x.sample_points(2, 5, 7).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.iter().all(|s| x9.contains(&s.point).unwrap()));
        assert!(x.sample_points(1, 0, 0).unwrap().1.is_empty());
        let g = make_field(3, 1, None).unwrap();
        assert_eq!(projective_points(&g, 3).unwrap().len(), 13);
    }
}
