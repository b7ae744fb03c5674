//! Free nilpotent Lie superalgebras, free presentations, and the Hopf-type
//! multiplier and cover computed from them.
//!
//! The free nilpotent superalgebra of class `c` on homogeneous generators is
//! realized inside the free associative superalgebra: its elements are
//! super-commutator polynomials in the generators, truncated at degree `c`.

use std::sync::Arc;

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::extensions::{quotient_extension, stem_denominator, stem_deformation, ExtensionSpec};
use crate::hom::HomSpec;
use crate::linalg::{Accumulator, Insertion, SparseVec, TrackedEchelon};
use crate::scalar::Field;
use crate::subspace::GradedSubspace;
use crate::superdim::{Parity, SuperDim};

#[derive(Clone, Debug)]
pub struct FreeNilpotent {
    pub generators: Vec<Parity>,
    pub class_bound: usize,
    pub algebra: Arc<LieSuperalgebra>,
    /// Degree of each basis vector.
    pub degrees: Vec<usize>,
    /// `Some((g, b))` when basis vector `k` is `[generator g, basis b]`.
    recipe: Vec<Option<(usize, usize)>>,
}

/// Words of one length as base-`g` integers.
struct WordAlgebra {
    pows: Vec<usize>,
    field: Field,
}

impl WordAlgebra {
    fn product(&self, u: &SparseVec, v: &SparseVec, len_v: usize) -> SparseVec {
        let shift = self.pows[len_v];
        let mut acc = Accumulator::default();
        for (a, x) in u.iter() {
            for (b, y) in v.iter() {
                acc.add_term(a * shift + b, x * y);
            }
        }
        acc.finish()
    }

    /// `uv - (-1)^{|u||v|} vu` for words of lengths `a` and `b`.
    fn commutator(&self, u: &SparseVec, a: usize, pu: Parity, v: &SparseVec, b: usize, pv: Parity) -> SparseVec {
        let uv = self.product(u, v, b);
        let vu = self.product(v, u, a);
        uv.add_scaled(&self.field.from_i64(-pu.koszul(pv)), &vu)
    }
}

/// Free nilpotent superalgebra of class `c` on generators of the given parities.
pub fn free_nilpotent(parities: &[Parity], c: usize) -> Result<FreeNilpotent> {
    free_nilpotent_over(parities, c, Field::Rational)
}

pub fn free_nilpotent_over(parities: &[Parity], c: usize, field: Field) -> Result<FreeNilpotent> {
    if parities.is_empty() {
        return Err(Error::InvalidParameters("at least one generator is needed".into()));
    }
    if c == 0 {
        return Err(Error::InvalidParameters("class bound must be at least 1".into()));
    }
    let g = parities.len();
    let mut pows = vec![1usize];
    for _ in 0..=c {
        let next = pows
            .last()
            .unwrap()
            .checked_mul(g)
            .ok_or_else(|| Error::InvalidParameters("too many words for this class bound".into()))?;
        pows.push(next);
    }
    let words = WordAlgebra { pows, field };

    let mut names: Vec<String> = (1..=g).map(|i| format!("x{i}")).collect();
    let mut par: Vec<Parity> = parities.to_vec();
    let mut degrees = vec![1; g];
    let mut recipe: Vec<Option<(usize, usize)>> = vec![None; g];
    let mut poly: Vec<SparseVec> = (0..g).map(|i| SparseVec::unit(i, field)).collect();
    // per degree: global indices of its basis, and the echelon of their words
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(), (0..g).collect()];
    let mut echelons: Vec<TrackedEchelon> = vec![TrackedEchelon::new(field), TrackedEchelon::new(field)];
    for v in &poly {
        echelons[1].insert(v);
    }

    for k in 2..=c {
        let mut te = TrackedEchelon::new(field);
        let mut members = Vec::new();
        for gi in 0..g {
            for &b in &by_degree[k - 1] {
                let w = words.commutator(&poly[gi], 1, par[gi], &poly[b], k - 1, par[b]);
                if let Insertion::Accepted(_) = te.insert(&w) {
                    members.push(names.len());
                    names.push(format!("[{},{}]", names[gi], names[b]));
                    par.push(par[gi] + par[b]);
                    degrees.push(k);
                    recipe.push(Some((gi, b)));
                    poly.push(w);
                }
            }
        }
        by_degree.push(members);
        echelons.push(te);
    }

    let d = names.len();
    let mut builder = AlgebraBuilder::new(field);
    for i in 0..d {
        builder.basis(names[i].clone(), par[i]);
    }
    for i in 0..d {
        for j in i..d {
            let (a, b) = (degrees[i], degrees[j]);
            if a + b > c || (i == j && par[i] == Parity::Even) {
                continue;
            }
            let w = words.commutator(&poly[i], a, par[i], &poly[j], b, par[j]);
            if w.is_zero() {
                continue;
            }
            let combo = echelons[a + b]
                .express(&w)
                .expect("brackets of Lie elements are spanned by left-normed ones");
            let members = &by_degree[a + b];
            builder.bracket(i, j, combo.remap(|t| Some(members[t])));
        }
    }
    Ok(FreeNilpotent {
        generators: parities.to_vec(),
        class_bound: c,
        algebra: Arc::new(builder.build()?),
        degrees,
        recipe,
    })
}

impl FreeNilpotent {
    pub fn sdim(&self) -> SuperDim {
        self.algebra.sdim()
    }

    /// Superdimension of the homogeneous component of degree `k`.
    pub fn degree_sdim(&self, k: usize) -> SuperDim {
        let idx: Vec<usize> = (0..self.degrees.len()).filter(|&i| self.degrees[i] == k).collect();
        self.algebra.span_of_basis(&idx).sdim()
    }

    /// Span of the basis vectors of degree at least `k`.
    pub fn degree_at_least(&self, k: usize) -> GradedSubspace {
        let idx: Vec<usize> = (0..self.degrees.len()).filter(|&i| self.degrees[i] >= k).collect();
        self.algebra.span_of_basis(&idx)
    }
}

/// `0 -> R -> F -> L -> 0` with `F` free nilpotent of class `c`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub free: FreeNilpotent,
    pub target: Arc<LieSuperalgebra>,
    pub generator_images: Vec<SparseVec>,
    pub kernel: GradedSubspace,
    pub projection: HomSpec,
}

/// Standard basis vectors spanning the non-pivot complement of `[L, L]`.
pub fn default_generators(target: &LieSuperalgebra) -> Vec<SparseVec> {
    target
        .derived()
        .free_coordinates()
        .into_iter()
        .map(|i| target.unit(i))
        .collect()
}

/// Class bound used when none is given: nilpotency class plus one.
pub fn default_class_bound(target: &LieSuperalgebra) -> Result<usize> {
    let class = target
        .nilpotency_class()
        .ok_or(Error::ClassTooLarge(target.dim()))?;
    Ok(class.max(1) + 1)
}

pub fn presentation(target: Arc<LieSuperalgebra>, images: &[SparseVec], c: usize) -> Result<Presentation> {
    match target.nilpotency_class() {
        Some(class) if class <= c => {}
        _ => return Err(Error::ClassTooLarge(c)),
    }
    let mut parities = Vec::with_capacity(images.len());
    for v in images {
        match target.grading().parity_of(v)? {
            Some(p) => parities.push(p),
            None => {
                return Err(Error::InvalidParameters("generator image is zero".into()));
            }
        }
    }
    if images.is_empty() {
        return Err(Error::NotGenerating);
    }
    let free = free_nilpotent_over(&parities, c, target.field())?;
    let mut pi: Vec<SparseVec> = Vec::with_capacity(free.algebra.dim());
    for k in 0..free.algebra.dim() {
        let img = match free.recipe[k] {
            None => images[k].clone(),
            Some((g, b)) => target.bracket(&images[g], &pi[b])?,
        };
        pi.push(img);
    }
    let projection = HomSpec::new(free.algebra.clone(), target.clone(), pi)?;
    if !projection.is_surjective() {
        return Err(Error::NotGenerating);
    }
    let kernel = projection.kernel();
    Ok(Presentation {
        free,
        target,
        generator_images: images.to_vec(),
        kernel,
        projection,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Denominator {
    /// `[R, F]`
    RF,
    /// `[R, R]`
    RR,
}

impl Presentation {
    /// `R ∩ [F, F]`.
    pub fn relations_in_derived(&self) -> GradedSubspace {
        self.kernel
            .intersect(&self.free.degree_at_least(2))
            .expect("same host")
    }

    /// `[R, F]`: the span of `[r, x]` for generators `x`, closed under
    /// bracketing with generators.
    pub fn commutator_rf(&self) -> GradedSubspace {
        let f = &self.free.algebra;
        let gens: Vec<SparseVec> = (0..self.free.generators.len()).map(|i| f.unit(i)).collect();
        let mut span = f.zero_subspace();
        let mut frontier = Vec::new();
        for r in self.kernel.basis() {
            for x in &gens {
                let v = f.bracket(r, x).expect("same algebra");
                if span.insert(&v).expect("homogeneous") {
                    frontier.push(v);
                }
            }
        }
        while let Some(v) = frontier.pop() {
            for x in &gens {
                let w = f.bracket(&v, x).expect("same algebra");
                if span.insert(&w).expect("homogeneous") {
                    frontier.push(w);
                }
            }
        }
        span
    }

    /// `[R, R]`.
    pub fn commutator_rr(&self) -> GradedSubspace {
        self.free
            .algebra
            .bracket_span(&self.kernel, &self.kernel)
            .expect("same host")
    }

    pub fn denominator(&self, which: Denominator) -> GradedSubspace {
        match which {
            Denominator::RF => self.commutator_rf(),
            Denominator::RR => self.commutator_rr(),
        }
    }

    /// `sdim (R ∩ [F, F]) - sdim D` at this class bound.
    pub fn hopf_sdim(&self, which: Denominator) -> SuperDim {
        self.relations_in_derived().sdim() - self.denominator(which).sdim()
    }
}

/// Hopf-type multiplier at a single class bound, without stability check.
pub fn hopf_multiplier_at(
    target: Arc<LieSuperalgebra>,
    images: &[SparseVec],
    c: usize,
    which: Denominator,
) -> Result<SuperDim> {
    Ok(presentation(target, images, c)?.hopf_sdim(which))
}

/// Hopf-type multiplier with generators from [`default_generators`]; the
/// value at `c` must agree with the value at `c + 1`.
pub fn hopf_multiplier(target: Arc<LieSuperalgebra>, c: Option<usize>, which: Denominator) -> Result<SuperDim> {
    let c = match c {
        Some(c) => c,
        None => default_class_bound(&target)?,
    };
    let gens = default_generators(&target);
    let at_bound = hopf_multiplier_at(target.clone(), &gens, c, which)?;
    let at_next = hopf_multiplier_at(target, &gens, c + 1, which)?;
    if at_bound != at_next {
        return Err(Error::ClassBoundTooSmall {
            class_bound: c,
            at_bound,
            at_next,
        });
    }
    Ok(at_bound)
}

/// Cover built from the free presentation: `F / [R, F]` followed by a stem
/// deformation.
pub fn cover_from_free(target: Arc<LieSuperalgebra>, c: Option<usize>) -> Result<ExtensionSpec> {
    let c = match c {
        Some(c) => c,
        None => default_class_bound(&target)?,
    };
    // fails with ClassBoundTooSmall when the truncation is not yet stable
    hopf_multiplier(target.clone(), Some(c), Denominator::RF)?;
    let gens = default_generators(&target);
    let pres = presentation(target, &gens, c)?;
    let rf = pres.commutator_rf();
    let free_ext = ExtensionSpec::new(
        pres.free.algebra.clone(),
        pres.kernel.clone(),
        pres.target.clone(),
        pres.projection.clone(),
    );
    let reduced = quotient_extension(&free_ext, &rf)?;
    let x = stem_denominator(&reduced, None)?;
    stem_deformation(&reduced, &x)
}
