//! Lie superalgebras given by structure constants on a homogeneous basis.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hom::HomSpec;
use crate::linalg::{kernel_of_images, Accumulator, SparseVec};
use crate::scalar::Field;
use crate::subspace::{Grading, GradedSubspace};
use crate::superdim::{Parity, SuperDim};

/// Finite-dimensional Lie superalgebra with a dense table of sparse
/// bracket vectors `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperalgebra {
    names: Vec<String>,
    grading: Grading,
    table: Vec<SparseVec>,
}

/// Collects basis elements and explicit brackets; mirrors are derived by
/// super skew-symmetry when the algebra is built.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    field: Field,
    names: Vec<String>,
    parities: Vec<Parity>,
    explicit: BTreeMap<(usize, usize), SparseVec>,
    conflict: Option<(usize, usize)>,
}

impl AlgebraBuilder {
    pub fn new(field: Field) -> Self {
        AlgebraBuilder {
            field,
            names: Vec::new(),
            parities: Vec::new(),
            explicit: BTreeMap::new(),
            conflict: None,
        }
    }

    /// Appends a basis element and returns its index.
    pub fn basis(&mut self, name: impl Into<String>, parity: Parity) -> usize {
        self.names.push(name.into());
        self.parities.push(parity);
        self.names.len() - 1
    }

    pub fn even(&mut self, name: impl Into<String>) -> usize {
        self.basis(name, Parity::Even)
    }

    pub fn odd(&mut self, name: impl Into<String>) -> usize {
        self.basis(name, Parity::Odd)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Sets `[e_i, e_j] = value`.
    pub fn bracket(&mut self, i: usize, j: usize, value: SparseVec) -> &mut Self {
        if let Some(prev) = self.explicit.get(&(i, j)) {
            if *prev != value {
                self.conflict.get_or_insert((i, j));
            }
        }
        self.explicit.insert((i, j), value);
        self
    }

    /// Sets `[e_i, e_j]` from integer coefficients.
    pub fn bracket_ints(&mut self, i: usize, j: usize, coeffs: &[(usize, i64)]) -> &mut Self {
        let field = self.field;
        self.bracket(
            i,
            j,
            SparseVec::from_pairs(coeffs.iter().map(|&(k, c)| (k, field.from_i64(c)))),
        )
    }

    pub fn build(self) -> Result<LieSuperalgebra> {
        if let Some((i, j)) = self.conflict {
            return Err(Error::ConflictingMirror(i, j));
        }
        let d = self.names.len();
        let grading = Grading::new(self.parities, self.field);
        let mut table = vec![SparseVec::zero(); d * d];
        for (&(i, j), v) in &self.explicit {
            for idx in [i, j].into_iter().chain(v.iter().map(|(k, _)| k)) {
                if idx >= d {
                    return Err(Error::IndexOutOfRange { index: idx, dim: d });
                }
            }
            if v.iter().any(|(_, c)| !self.field.contains(c)) {
                return Err(Error::FieldMismatch(self.field.to_string(), "scalar".into()));
            }
            table[i * d + j] = v.clone();
            if i != j {
                let sign = -grading.parity(i).koszul(grading.parity(j));
                let mirror = v.scale(&self.field.from_i64(sign));
                match self.explicit.get(&(j, i)) {
                    Some(given) if *given != mirror => {
                        return Err(Error::ConflictingMirror(i.min(j), i.max(j)))
                    }
                    Some(_) => {}
                    None => table[j * d + i] = mirror,
                }
            }
        }
        Ok(LieSuperalgebra {
            names: self.names,
            grading,
            table,
        })
    }
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Parity { left: usize, right: usize },
    Skew { left: usize, right: usize },
    Jacobi { x: usize, y: usize, z: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    names: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        let n = |i: &usize| &self.names[*i];
        for v in &self.violations {
            match v {
                Violation::Parity { left, right } => {
                    writeln!(f, "parity violated at pair ({}, {})", n(left), n(right))?
                }
                Violation::Skew { left, right } => {
                    writeln!(f, "skew-symmetry violated at pair ({}, {})", n(left), n(right))?
                }
                Violation::Jacobi { x, y, z } => {
                    writeln!(f, "Jacobi identity violated at triple ({}, {}, {})", n(x), n(y), n(z))?
                }
            }
        }
        Ok(())
    }
}

impl LieSuperalgebra {
    /// Zero-dimensional algebra.
    pub fn zero(field: Field) -> Self {
        AlgebraBuilder::new(field).build().expect("empty algebra")
    }

    pub fn field(&self) -> Field {
        self.grading.field()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn sdim(&self) -> SuperDim {
        self.grading.sdim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.grading.parity(i)
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// `[e_i, e_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Overwrites one table entry without touching its mirror.
    pub fn with_structure(mut self, i: usize, j: usize, value: SparseVec) -> Self {
        let d = self.dim();
        self.table[i * d + j] = value;
        self
    }

    pub fn unit(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field())
    }

    pub fn full(&self) -> GradedSubspace {
        GradedSubspace::full(&self.grading)
    }

    pub fn zero_subspace(&self) -> GradedSubspace {
        GradedSubspace::zero(&self.grading)
    }

    /// Subspace spanned by the given basis vectors.
    pub fn span_of_basis(&self, indices: &[usize]) -> GradedSubspace {
        let units: Vec<SparseVec> = indices.iter().map(|&i| self.unit(i)).collect();
        GradedSubspace::echelonize(&units, &self.grading).expect("units are homogeneous")
    }

    fn check_vec(&self, v: &SparseVec) -> Result<()> {
        match v.max_index() {
            Some(m) if m >= self.dim() => Err(Error::Dimension {
                expected: self.dim(),
                got: m + 1,
            }),
            _ => Ok(()),
        }
    }

    /// `[e_i, v]` for a basis element and an arbitrary vector.
    fn ad_basis(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::default();
        for (k, c) in v.iter() {
            acc.add_scaled(c, self.structure(i, k));
        }
        acc.finish()
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &SparseVec, v: &SparseVec) -> Result<SparseVec> {
        self.check_vec(u)?;
        self.check_vec(v)?;
        let mut acc = Accumulator::default();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let s = self.structure(i, j);
                if !s.is_zero() {
                    acc.add_scaled(&(a * b), s);
                }
            }
        }
        Ok(acc.finish())
    }

    /// Checks parity compatibility, super skew-symmetry and the super
    /// Jacobi identity on all basis pairs and triples.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let field = self.field();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let s = self.structure(i, j);
                let expect = self.parity(i) + self.parity(j);
                if s.iter().any(|(k, _)| self.parity(k) != expect) {
                    violations.push(Violation::Parity { left: i, right: j });
                }
                if j >= i {
                    let sign = -self.parity(i).koszul(self.parity(j));
                    if *self.structure(j, i) != s.scale(&field.from_i64(sign)) {
                        violations.push(Violation::Skew { left: i, right: j });
                    }
                }
            }
        }
        // the Jacobiator is graded-symmetric once skew-symmetry holds
        for x in 0..d {
            for y in x..d {
                for z in y..d {
                    if !self.jacobiator(x, y, z).is_zero() {
                        violations.push(Violation::Jacobi { x, y, z });
                    }
                }
            }
        }
        ValidationReport {
            violations,
            names: self.names.clone(),
        }
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]]`.
    pub fn jacobiator(&self, x: usize, y: usize, z: usize) -> SparseVec {
        let (px, py, pz) = (self.parity(x), self.parity(y), self.parity(z));
        let f = self.field();
        let mut acc = Accumulator::default();
        for (a, b, c, sign) in [
            (x, y, z, px.koszul(pz)),
            (y, z, x, px.koszul(py)),
            (z, x, y, py.koszul(pz)),
        ] {
            let inner = self.structure(b, c);
            if !inner.is_zero() {
                acc.add_scaled(&f.from_i64(sign), &self.ad_basis(a, inner));
            }
        }
        acc.finish()
    }

    fn check_host(&self, s: &GradedSubspace) -> Result<()> {
        if *s.host() != self.grading {
            return Err(Error::HostMismatch(s.host_dim(), self.sdim()));
        }
        Ok(())
    }

    /// Span of all brackets of basis vectors of `x` with basis vectors of `y`.
    pub fn bracket_span(&self, x: &GradedSubspace, y: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_host(x)?;
        self.check_host(y)?;
        let mut out = self.zero_subspace();
        for u in x.basis() {
            for v in y.basis() {
                out.insert(&self.bracket(u, v)?)?;
            }
        }
        Ok(out)
    }

    /// Largest subspace `Z` with `[Z, L] = 0`.
    pub fn center(&self) -> GradedSubspace {
        let d = self.dim();
        let mut out = self.zero_subspace();
        for parity in Parity::BOTH {
            let coords: Vec<usize> = (0..d).filter(|&i| self.parity(i) == parity).collect();
            let images: Vec<SparseVec> = coords
                .iter()
                .map(|&i| {
                    SparseVec::from_pairs((0..d).flat_map(|j| {
                        self.structure(i, j).iter().map(move |(k, c)| (j * d + k, c.clone()))
                    }))
                })
                .collect();
            for k in kernel_of_images(&images, self.field()) {
                out.insert(&k.remap(|a| Some(coords[a])))
                    .expect("homogeneous by construction");
            }
        }
        out
    }

    pub fn derived(&self) -> GradedSubspace {
        let full = self.full();
        self.bracket_span(&full, &full).expect("same host")
    }

    /// `γ_1 = L, γ_{k+1} = [L, γ_k]`, stopping at zero or when the series
    /// stabilizes (at most `dim + 1` terms).
    pub fn lower_central_series(&self) -> Vec<GradedSubspace> {
        let full = self.full();
        let mut series = vec![full.clone()];
        for _ in 0..=self.dim() {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.bracket_span(&full, last).expect("same host");
            if next == *last {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Nilpotency class `c` (smallest with `γ_{c+1} = 0`), if nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        series
            .last()
            .expect("nonempty")
            .is_zero()
            .then(|| series.len() - 1)
    }

    pub fn is_ideal(&self, s: &GradedSubspace) -> Result<bool> {
        self.bracket_span(s, &self.full())?.is_subspace_of(s)
    }

    /// Quotient by an ideal, realized on the complement coordinates.
    pub fn quotient(self: &Arc<Self>, ideal: &GradedSubspace) -> Result<Quotient> {
        self.check_host(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let field = self.field();
        let reps = ideal.free_coordinates();
        let mut position = vec![None; self.dim()];
        for (q, &c) in reps.iter().enumerate() {
            position[c] = Some(q);
        }
        let to_quotient = |v: &SparseVec| ideal.reduce(v).remap(|i| position[i]);
        let mut b = AlgebraBuilder::new(field);
        for (q, &c) in reps.iter().enumerate() {
            b.basis(format!("q{q}"), self.parity(c));
        }
        for (a, &ca) in reps.iter().enumerate() {
            for (bi, &cb) in reps.iter().enumerate().skip(a) {
                let v = to_quotient(self.structure(ca, cb));
                if !v.is_zero() {
                    b.bracket(a, bi, v);
                }
            }
        }
        let algebra = Arc::new(b.build()?);
        let images = (0..self.dim()).map(|j| to_quotient(&self.unit(j))).collect();
        let projection = HomSpec::new(self.clone(), algebra.clone(), images)?;
        Ok(Quotient {
            algebra,
            projection,
            representatives: reps,
        })
    }

    /// Block-diagonal direct sum; basis of `self` first.
    pub fn direct_sum(&self, other: &LieSuperalgebra) -> Result<LieSuperalgebra> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(
                self.field().to_string(),
                other.field().to_string(),
            ));
        }
        let (d1, d2) = (self.dim(), other.dim());
        let mut b = AlgebraBuilder::new(self.field());
        for i in 0..d1 {
            b.basis(self.names[i].clone(), self.parity(i));
        }
        for i in 0..d2 {
            b.basis(other.names[i].clone(), other.parity(i));
        }
        for i in 0..d1 {
            for j in i..d1 {
                b.bracket(i, j, self.structure(i, j).clone());
            }
        }
        for i in 0..d2 {
            for j in i..d2 {
                b.bracket(d1 + i, d1 + j, other.structure(i, j).remap(|k| Some(k + d1)));
            }
        }
        b.build()
    }
}

/// Result of [`LieSuperalgebra::quotient`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<LieSuperalgebra>,
    pub projection: HomSpec,
    /// Source coordinate represented by each quotient basis vector `q_k`.
    pub representatives: Vec<usize>,
}

impl Quotient {
    /// Section of the projection: `q_k -> e_{representatives[k]}`.
    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        v.remap(|k| Some(self.representatives[k]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(field: Field, coeffs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(coeffs.iter().map(|&(k, c)| (k, field.from_i64(c))))
    }

    fn q() -> Field {
        Field::Rational
    }

    /// H(1): u | z, w with [u, w] = z.
    fn h1() -> Arc<LieSuperalgebra> {
        let mut b = AlgebraBuilder::new(q());
        let u = b.even("u1");
        let z = b.odd("z");
        let w = b.odd("w1");
        b.bracket_ints(u, w, &[(z, 1)]);
        Arc::new(b.build().unwrap())
    }

    #[test]
    fn mirrors_are_derived() {
        let h = h1();
        assert_eq!(*h.structure(2, 0), ints(q(), &[(1, -1)]));
        assert!(h.validate().is_ok());
    }

    #[test]
    fn conflicting_mirror_rejected() {
        let mut b = AlgebraBuilder::new(q());
        let x = b.even("x");
        let y = b.even("y");
        b.bracket_ints(x, y, &[(x, 1)]);
        b.bracket_ints(y, x, &[(x, 1)]);
        assert_eq!(b.build(), Err(Error::ConflictingMirror(0, 1)));
    }

    #[test]
    fn even_square_is_a_skew_violation() {
        let mut b = AlgebraBuilder::new(q());
        let x = b.even("x");
        b.bracket_ints(x, x, &[(x, 1)]);
        let report = b.build().unwrap().validate();
        assert!(report.violations.contains(&Violation::Skew { left: 0, right: 0 }));
        assert!(report.to_string().contains("(x, x)"));
    }

    #[test]
    fn bracket_examples() {
        let h = h1();
        let (u, z, w) = (h.unit(0), h.unit(1), h.unit(2));
        assert_eq!(h.bracket(&u, &w).unwrap(), z);
        assert_eq!(h.bracket(&w, &u).unwrap(), z.neg());
        assert!(h.bracket(&z, &z).unwrap().is_zero());
        assert!(h.bracket(&SparseVec::unit(7, q()), &u).is_err());
    }

    #[test]
    fn invariants_of_h1() {
        let h = h1();
        assert_eq!(h.derived(), h.span_of_basis(&[1]));
        assert_eq!(h.center(), h.span_of_basis(&[1]));
        assert_eq!(h.nilpotency_class(), Some(2));
        assert!(h.is_ideal(&h.span_of_basis(&[1])).unwrap());
        assert!(!h.is_ideal(&h.span_of_basis(&[0])).unwrap());
        assert!(h.is_ideal(&h.zero_subspace()).unwrap());
        assert!(h.is_ideal(&h.full()).unwrap());
    }

    #[test]
    fn quotient_edge_cases() {
        let h = h1();
        let same = h.quotient(&h.zero_subspace()).unwrap();
        assert_eq!(same.algebra.sdim(), h.sdim());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(same.algebra.structure(i, j), h.structure(i, j));
            }
        }
        let trivial = h.quotient(&h.full()).unwrap();
        assert_eq!(trivial.algebra.dim(), 0);
        assert_eq!(h.quotient(&h.span_of_basis(&[0])).err(), Some(Error::NotAnIdeal));
    }

    #[test]
    fn quotient_projection_and_section() {
        let h = h1();
        let quo = h.quotient(&h.span_of_basis(&[1])).unwrap();
        assert!(quo.projection.verify_hom());
        assert!(!quo.projection.verify_iso());
        assert!(quo.algebra.validate().is_ok());
        for k in 0..quo.algebra.dim() {
            let v = quo.algebra.unit(k);
            assert_eq!(quo.projection.apply(&quo.lift(&v)), v);
        }
    }

    #[test]
    fn direct_sum_center() {
        let h = h1();
        let mut b = AlgebraBuilder::new(q());
        b.even("x");
        let a = b.build().unwrap();
        let s = h.direct_sum(&a).unwrap();
        assert!(s.validate().is_ok());
        assert_eq!(s.center().sdim(), SuperDim::new(1, 1));
        assert_eq!(h.direct_sum(&LieSuperalgebra::zero(q())).unwrap(), *h);
        let p = LieSuperalgebra::zero(Field::prime(5).unwrap());
        assert!(h.direct_sum(&p).is_err());
    }
}
