//! Central and stem extensions, stem denominators and stem deformations.
//!
//! An extension `0 -> A -> B -> L -> 0` is stored as the total algebra `B`,
//! the kernel `A` as a subspace of `B`, the base `L`, and the projection.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::cohomology::{multiplier_sdim, Cochain2, CochainSpace};
use crate::error::{Error, Result};
use crate::hom::HomSpec;
use crate::linalg::SparseVec;
use crate::subspace::GradedSubspace;

#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub total: Arc<LieSuperalgebra>,
    pub kernel: GradedSubspace,
    pub base: Arc<LieSuperalgebra>,
    pub projection: HomSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionIssue {
    KernelHostMismatch,
    ProjectionShape,
    KernelNotIdeal,
    ProjectionNotHomomorphism,
    ProjectionNotSurjective,
    KernelNotProjectionKernel,
}

impl fmt::Display for ExtensionIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ExtensionIssue::KernelHostMismatch => "kernel does not live in the total algebra",
            ExtensionIssue::ProjectionShape => "projection does not map total to base",
            ExtensionIssue::KernelNotIdeal => "kernel is not an ideal of the total algebra",
            ExtensionIssue::ProjectionNotHomomorphism => "projection is not a homomorphism",
            ExtensionIssue::ProjectionNotSurjective => "projection is not surjective",
            ExtensionIssue::KernelNotProjectionKernel => "kernel differs from the kernel of the projection",
        };
        f.write_str(msg)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtensionReport {
    pub issues: Vec<ExtensionIssue>,
}

impl ExtensionReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ExtensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl ExtensionSpec {
    pub fn new(
        total: Arc<LieSuperalgebra>,
        kernel: GradedSubspace,
        base: Arc<LieSuperalgebra>,
        projection: HomSpec,
    ) -> Self {
        ExtensionSpec {
            total,
            kernel,
            base,
            projection,
        }
    }

    /// `0 -> 0 -> L -> L -> 0`.
    pub fn identity(base: Arc<LieSuperalgebra>) -> Self {
        ExtensionSpec {
            total: base.clone(),
            kernel: base.zero_subspace(),
            base: base.clone(),
            projection: HomSpec::identity(base),
        }
    }

    /// `0 -> A -> A ⊕ L -> L -> 0`, with `A` occupying the first coordinates.
    pub fn trivial(kernel: &LieSuperalgebra, base: Arc<LieSuperalgebra>) -> Result<Self> {
        let total = Arc::new(kernel.direct_sum(&base)?);
        let a = kernel.dim();
        let images = (0..total.dim())
            .map(|i| {
                if i < a {
                    SparseVec::zero()
                } else {
                    base.unit(i - a)
                }
            })
            .collect();
        let projection = HomSpec::new(total.clone(), base.clone(), images)?;
        let kernel = total.span_of_basis(&(0..a).collect::<Vec<_>>());
        Ok(ExtensionSpec::new(total, kernel, base, projection))
    }

    /// Central extension of `base` by one central basis vector per cocycle:
    /// `[x, y] = [x, y]_L + sum_l f_l(x, y) c_l`.
    pub fn central(base: Arc<LieSuperalgebra>, cocycles: &[Cochain2]) -> Result<Self> {
        let cs = CochainSpace::new(&base);
        for f in cocycles {
            if !cs.is_cocycle(f) {
                return Err(Error::Precondition("cochain is not a cocycle".into()));
            }
        }
        let d = base.dim();
        let field = base.field();
        let mut b = AlgebraBuilder::new(field);
        for i in 0..d {
            b.basis(base.name(i), base.parity(i));
        }
        for (l, f) in cocycles.iter().enumerate() {
            b.basis(format!("c{l}"), f.parity);
        }
        for i in 0..d {
            for j in i..d {
                let mut v = base.structure(i, j).clone();
                for (l, f) in cocycles.iter().enumerate() {
                    let val = cs.evaluate(f, &base.unit(i), &base.unit(j));
                    v = v.add(&SparseVec::from_pairs([(d + l, val)]));
                }
                if !v.is_zero() {
                    b.bracket(i, j, v);
                }
            }
        }
        let total = Arc::new(b.build()?);
        let images = (0..total.dim())
            .map(|i| if i < d { base.unit(i) } else { SparseVec::zero() })
            .collect();
        let projection = HomSpec::new(total.clone(), base.clone(), images)?;
        let kernel = total.span_of_basis(&(d..d + cocycles.len()).collect::<Vec<_>>());
        Ok(ExtensionSpec::new(total, kernel, base, projection))
    }

    pub fn verify(&self) -> ExtensionReport {
        verify_extension(self)
    }

    pub fn is_central(&self) -> bool {
        is_central(self)
    }

    pub fn is_stem(&self) -> bool {
        is_stem(self)
    }

    /// `[A, B]`.
    pub fn kernel_commutator(&self) -> GradedSubspace {
        self.total
            .bracket_span(&self.kernel, &self.total.full())
            .expect("kernel lives in total")
    }

    /// `A ∩ [B, B]`.
    pub fn kernel_in_derived(&self) -> GradedSubspace {
        self.kernel
            .intersect(&self.total.derived())
            .expect("kernel lives in total")
    }

    /// Map `total / kernel -> base` induced by the projection.
    pub fn canonical_iso(&self) -> Result<HomSpec> {
        let quo = self.total.quotient(&self.kernel)?;
        let images = (0..quo.algebra.dim())
            .map(|k| self.projection.apply(&quo.lift(&quo.algebra.unit(k))))
            .collect();
        HomSpec::new(quo.algebra.clone(), self.base.clone(), images)
    }
}

/// Kernel is an ideal, projection is a surjective homomorphism, and the
/// kernel is exactly the nullspace of the projection.
pub fn verify_extension(e: &ExtensionSpec) -> ExtensionReport {
    let mut issues = Vec::new();
    if e.kernel.host() != e.total.grading() {
        issues.push(ExtensionIssue::KernelHostMismatch);
        return ExtensionReport { issues };
    }
    if *e.projection.source != *e.total || *e.projection.target != *e.base {
        issues.push(ExtensionIssue::ProjectionShape);
        return ExtensionReport { issues };
    }
    if !e.total.is_ideal(&e.kernel).unwrap_or(false) {
        issues.push(ExtensionIssue::KernelNotIdeal);
    }
    if !e.projection.verify_hom() {
        issues.push(ExtensionIssue::ProjectionNotHomomorphism);
    }
    if !e.projection.is_surjective() {
        issues.push(ExtensionIssue::ProjectionNotSurjective);
    }
    if e.projection.kernel() != e.kernel {
        issues.push(ExtensionIssue::KernelNotProjectionKernel);
    }
    ExtensionReport { issues }
}

pub fn is_central(e: &ExtensionSpec) -> bool {
    e.kernel.is_subspace_of(&e.total.center()).unwrap_or(false)
}

pub fn is_stem(e: &ExtensionSpec) -> bool {
    is_central(e) && e.kernel.is_subspace_of(&e.total.derived()).unwrap_or(false)
}

fn check_denominator_bounds(e: &ExtensionSpec, x: &GradedSubspace) -> Result<()> {
    if !x.is_subspace_of(&e.kernel)? {
        return Err(Error::Precondition("denominator is not inside the kernel".into()));
    }
    if !e.kernel_commutator().is_subspace_of(x)? {
        return Err(Error::Precondition("denominator does not contain [A, B]".into()));
    }
    Ok(())
}

/// `A = A ∩ [B, B] + X` and `[B, B] ∩ X = [A, B]`, for `[A, B] ⊆ X ⊆ A`.
pub fn is_stem_denominator(e: &ExtensionSpec, x: &GradedSubspace) -> Result<bool> {
    check_denominator_bounds(e, x)?;
    let ab = e.kernel_commutator();
    let spans = e.kernel_in_derived().sum(x)? == e.kernel;
    let meets = e.total.derived().intersect(x)? == ab;
    Ok(spans && meets)
}

/// Deterministic stem denominator: `[A, B]` plus the basis vectors of `A`
/// (or of `A ∩ within`) needed to complete `A ∩ [B, B]` to `A`.
pub fn stem_denominator(e: &ExtensionSpec, within: Option<&GradedSubspace>) -> Result<GradedSubspace> {
    let ab = e.kernel_commutator();
    let pool = match within {
        Some(w) => {
            if !ab.is_subspace_of(w)? {
                return Err(Error::Unsatisfiable("[A, B] is not inside the constraint".into()));
            }
            e.kernel.intersect(w)?
        }
        None => e.kernel.clone(),
    };
    let mut reached = e.kernel_in_derived();
    let mut x = ab;
    for v in pool.basis() {
        if !reached.contains(v)? {
            reached.insert(v)?;
            x.insert(v)?;
        }
    }
    if reached != e.kernel {
        return Err(Error::Unsatisfiable(
            "A ∩ [B, B] + (A ∩ within) does not span A".into(),
        ));
    }
    Ok(x)
}

/// `0 -> A/X -> B/X -> L -> 0` for a stem denominator `X`.
pub fn stem_deformation(e: &ExtensionSpec, x: &GradedSubspace) -> Result<ExtensionSpec> {
    if !is_stem_denominator(e, x)? {
        return Err(Error::Precondition("not a stem denominator".into()));
    }
    quotient_extension(e, x)
}

/// Passes an extension to the quotient by an ideal `X ⊆ A`.
pub(crate) fn quotient_extension(e: &ExtensionSpec, x: &GradedSubspace) -> Result<ExtensionSpec> {
    let quo = e.total.quotient(x)?;
    let mut kernel = quo.algebra.zero_subspace();
    for v in e.kernel.basis() {
        kernel.insert(&quo.projection.apply(v))?;
    }
    let images = (0..quo.algebra.dim())
        .map(|k| e.projection.apply(&quo.lift(&quo.algebra.unit(k))))
        .collect();
    let projection = HomSpec::new(quo.algebra.clone(), e.base.clone(), images)?;
    Ok(ExtensionSpec::new(quo.algebra, kernel, e.base.clone(), projection))
}

/// Stem extension whose kernel has the superdimension of the multiplier.
pub fn is_maximal_stem(e: &ExtensionSpec) -> Result<bool> {
    Ok(is_stem(e) && e.kernel.sdim() == multiplier_sdim(&e.base)?)
}
