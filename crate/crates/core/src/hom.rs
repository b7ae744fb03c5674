//! Even linear maps between Lie superalgebras.

use std::sync::Arc;

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel_of_images, Accumulator, SparseVec};
use crate::subspace::GradedSubspace;
use crate::superdim::Parity;

/// Linear map given by the images of the source basis vectors.
#[derive(Clone, Debug)]
pub struct HomSpec {
    pub source: Arc<LieSuperalgebra>,
    pub target: Arc<LieSuperalgebra>,
    images: Vec<SparseVec>,
}

impl HomSpec {
    pub fn new(
        source: Arc<LieSuperalgebra>,
        target: Arc<LieSuperalgebra>,
        images: Vec<SparseVec>,
    ) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::Dimension {
                expected: source.dim(),
                got: images.len(),
            });
        }
        if source.field() != target.field() {
            return Err(Error::FieldMismatch(
                source.field().to_string(),
                target.field().to_string(),
            ));
        }
        for img in &images {
            if let Some(m) = img.max_index() {
                if m >= target.dim() {
                    return Err(Error::IndexOutOfRange { index: m, dim: target.dim() });
                }
            }
        }
        Ok(HomSpec { source, target, images })
    }

    pub fn identity(algebra: Arc<LieSuperalgebra>) -> Self {
        let images = (0..algebra.dim()).map(|i| algebra.unit(i)).collect();
        HomSpec {
            source: algebra.clone(),
            target: algebra,
            images,
        }
    }

    pub fn images(&self) -> &[SparseVec] {
        &self.images
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::default();
        for (i, c) in v.iter() {
            acc.add_scaled(c, &self.images[i]);
        }
        acc.finish()
    }

    /// Sends even basis vectors into the even part and odd into odd.
    pub fn is_even(&self) -> bool {
        self.images.iter().enumerate().all(|(i, img)| {
            img.iter()
                .all(|(k, _)| self.target.parity(k) == self.source.parity(i))
        })
    }

    /// Even, and `h([x, y]) = [h(x), h(y)]` on all basis pairs.
    pub fn verify_hom(&self) -> bool {
        if !self.is_even() {
            return false;
        }
        let d = self.source.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = self.apply(self.source.structure(i, j));
                let rhs = self
                    .target
                    .bracket(&self.images[i], &self.images[j])
                    .expect("images in range");
                lhs == rhs
            })
        })
    }

    pub fn kernel(&self) -> GradedSubspace {
        let mut out = self.source.zero_subspace();
        for parity in Parity::BOTH {
            let coords: Vec<usize> = (0..self.source.dim())
                .filter(|&i| self.source.parity(i) == parity)
                .collect();
            let imgs: Vec<SparseVec> = coords.iter().map(|&i| self.images[i].clone()).collect();
            for k in kernel_of_images(&imgs, self.source.field()) {
                out.insert(&k.remap(|a| Some(coords[a])))
                    .expect("homogeneous");
            }
        }
        out
    }

    pub fn image(&self) -> Result<GradedSubspace> {
        let mut out = self.target.zero_subspace();
        for img in &self.images {
            out.insert(img)?;
        }
        Ok(out)
    }

    pub fn is_surjective(&self) -> bool {
        self.image()
            .map(|im| im.dim() == self.target.dim())
            .unwrap_or(false)
    }

    /// Homomorphism that is also bijective.
    pub fn verify_iso(&self) -> bool {
        self.source.sdim() == self.target.sdim() && self.verify_hom() && self.kernel().is_zero()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &HomSpec) -> Result<HomSpec> {
        if *self.target != *next.source {
            return Err(Error::Precondition("composition of mismatched maps".into()));
        }
        HomSpec::new(
            self.source.clone(),
            next.target.clone(),
            self.images.iter().map(|v| next.apply(v)).collect(),
        )
    }
}
