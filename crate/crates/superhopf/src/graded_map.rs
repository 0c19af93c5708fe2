//! Linear maps between super spaces, carried as (even, odd) part pairs.
//!
//! The even part sends parity `i` to parity `i`, the odd part to `i+1`; both
//! are stored explicitly because integrals need not be graded. The tensor of
//! maps applies the Koszul rule `(f⊗g)(v⊗w) = (−1)^{|g||v|} f(v)⊗g(w)` on
//! homogeneous parts, extended bilinearly.

use crate::error::{Error, Result};
use crate::matrix::{require_same_field, Mat};
use crate::scalar::Scalar;
use crate::space::SuperSpace;

#[derive(Debug, Clone, PartialEq)]
pub struct GradedMap {
    source: SuperSpace,
    target: SuperSpace,
    even: Mat,
    odd: Mat,
}

impl GradedMap {
    /// Build from a total matrix (target-dim × source-dim); entries are split
    /// into the even and odd parts by the parity bookkeeping, so the grading
    /// invariants hold by construction.
    pub fn from_total(source: SuperSpace, target: SuperSpace, total: Mat) -> GradedMap {
        assert_eq!(total.rows(), target.dim(), "graded map row count");
        assert_eq!(total.cols(), source.dim(), "graded map column count");
        assert_eq!(total.field(), source.field());
        let mut even = Mat::zero(source.field(), target.dim(), source.dim());
        let mut odd = Mat::zero(source.field(), target.dim(), source.dim());
        for (r, c, s) in total.entries() {
            if target.parity(r) == source.parity(c) {
                even.set(r, c, s.clone());
            } else {
                odd.set(r, c, s.clone());
            }
        }
        GradedMap {
            source,
            target,
            even,
            odd,
        }
    }

    pub fn zero(source: SuperSpace, target: SuperSpace) -> GradedMap {
        let z = Mat::zero(source.field(), target.dim(), source.dim());
        GradedMap {
            even: z.clone(),
            odd: z,
            source,
            target,
        }
    }

    pub fn identity(space: &SuperSpace) -> GradedMap {
        GradedMap::from_total(
            space.clone(),
            space.clone(),
            Mat::identity(space.field(), space.dim()),
        )
    }

    pub fn source(&self) -> &SuperSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperSpace {
        &self.target
    }

    pub fn even_part(&self) -> &Mat {
        &self.even
    }

    pub fn odd_part(&self) -> &Mat {
        &self.odd
    }

    pub fn total(&self) -> Mat {
        self.even.add(&self.odd)
    }

    pub fn is_even(&self) -> bool {
        self.odd.is_zero()
    }

    pub fn is_odd(&self) -> bool {
        self.even.is_zero()
    }

    /// A map is homogeneous iff one part vanishes.
    pub fn is_homogeneous(&self) -> bool {
        self.is_even() || self.is_odd()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.total().apply(v)
    }

    pub fn apply_to_basis(&self, i: usize) -> Vec<Scalar> {
        self.apply(&self.source.basis_vector(i))
    }

    /// `self ∘ other` (apply `other` first). Spaces must agree up to
    /// signature; names are labels and may differ across construction routes.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap> {
        require_same_field(self.source.field(), other.source.field())?;
        if !self.source.same_signature(&other.target) {
            return Err(Error::ShapeMismatch(format!(
                "compose: inner spaces disagree ({} vs {})",
                self.source.dim(),
                other.target.dim()
            )));
        }
        Ok(GradedMap::from_total(
            other.source.clone(),
            self.target.clone(),
            self.total().mul(&other.total()),
        ))
    }

    pub fn add(&self, other: &GradedMap) -> GradedMap {
        assert!(self.source.same_signature(&other.source));
        assert!(self.target.same_signature(&other.target));
        GradedMap::from_total(
            self.source.clone(),
            self.target.clone(),
            self.total().add(&other.total()),
        )
    }

    pub fn sub(&self, other: &GradedMap) -> GradedMap {
        assert!(self.source.same_signature(&other.source));
        assert!(self.target.same_signature(&other.target));
        GradedMap::from_total(
            self.source.clone(),
            self.target.clone(),
            self.total().sub(&other.total()),
        )
    }

    pub fn scale(&self, s: &Scalar) -> GradedMap {
        GradedMap::from_total(self.source.clone(), self.target.clone(), self.total().scale(s))
    }

    /// Reinterpret the same matrix between relabeled spaces; signatures must
    /// match positionally.
    pub fn recast(&self, source: SuperSpace, target: SuperSpace) -> GradedMap {
        assert!(self.source.same_signature(&source), "recast source signature");
        assert!(self.target.same_signature(&target), "recast target signature");
        GradedMap::from_total(source, target, self.total())
    }

    /// The Koszul tensor product of maps.
    pub fn tensor(&self, g: &GradedMap) -> Result<GradedMap> {
        require_same_field(self.source.field(), g.source.field())?;
        let source = self.source.tensor(&g.source)?;
        let target = self.target.tensor(&g.target)?;
        let ws = g.source.dim();
        let wt = g.target.dim();
        let mut total = Mat::zero(source.field(), target.dim(), source.dim());
        let f_total = self.total();
        // (f⊗g)(v⊗w): g's odd component picks up (−1)^{|v|}
        for (tv, sv, a) in f_total.entries() {
            let sign_odd = if self.source.parity(sv) == 1 { -1 } else { 1 };
            for (tw, sw, b) in g.even.entries() {
                total.add_to(tv * wt + tw, sv * ws + sw, &a.mul(b));
            }
            for (tw, sw, b) in g.odd.entries() {
                let v = a.mul(b);
                let v = if sign_odd < 0 { v.neg() } else { v };
                total.add_to(tv * wt + tw, sv * ws + sw, &v);
            }
        }
        Ok(GradedMap::from_total(source, target, total))
    }

    /// The super-symmetry `c_{V,W}: V⊗W → W⊗V`, `v⊗w ↦ (−1)^{|v||w|} w⊗v`.
    pub fn braiding(v: &SuperSpace, w: &SuperSpace) -> Result<GradedMap> {
        require_same_field(v.field(), w.field())?;
        let source = v.tensor(w)?;
        let target = w.tensor(v)?;
        let mut total = Mat::zero(v.field(), target.dim(), source.dim());
        for i in 0..v.dim() {
            for j in 0..w.dim() {
                let sign = v.parity(i) * w.parity(j);
                let s = if sign == 1 {
                    v.field().from_i64(-1)
                } else {
                    v.field().one()
                };
                total.set(j * v.dim() + i, i * w.dim() + j, s);
            }
        }
        Ok(GradedMap::from_total(source, target, total))
    }

    /// Rank of the total matrix.
    pub fn rank(&self) -> usize {
        self.total().rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_surjective()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.total().kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn odd_line(name: &str) -> SuperSpace {
        SuperSpace::new(q(), vec![(name.into(), 1)]).unwrap()
    }

    #[test]
    fn braiding_on_purely_even_is_transposition() {
        let v = SuperSpace::new(q(), vec![("a".into(), 0), ("b".into(), 0)]).unwrap();
        let w = SuperSpace::new(q(), vec![("x".into(), 0)]).unwrap();
        let c = GradedMap::braiding(&v, &w).unwrap();
        // a⊗x ↦ x⊗a with coefficient +1
        let img = c.apply(&c.source().basis_vector(0));
        assert!(img[0].is_one());
        assert!(c.is_even());
    }

    #[test]
    fn braiding_odd_odd_flips_sign() {
        let v = odd_line("v");
        let w = odd_line("w");
        let c = GradedMap::braiding(&v, &w).unwrap();
        let img = c.apply(&c.source().basis_vector(0));
        assert_eq!(img[0], q().from_i64(-1));
    }

    #[test]
    fn braiding_is_involution() {
        let v = SuperSpace::new(q(), vec![("a".into(), 0), ("b".into(), 1)]).unwrap();
        let w = SuperSpace::new(q(), vec![("x".into(), 1), ("y".into(), 0)]).unwrap();
        let c_vw = GradedMap::braiding(&v, &w).unwrap();
        let c_wv = GradedMap::braiding(&w, &v).unwrap();
        let id = GradedMap::identity(c_vw.source());
        assert_eq!(c_wv.compose(&c_vw).unwrap().total(), id.total());
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        let v = SuperSpace::new(q(), vec![("a".into(), 0), ("b".into(), 1)]).unwrap();
        let w = odd_line("w");
        let t = GradedMap::identity(&v).tensor(&GradedMap::identity(&w)).unwrap();
        assert_eq!(t.total(), Mat::identity(q(), 2));
    }

    #[test]
    fn tensor_of_even_maps_is_plain_kronecker() {
        let v = SuperSpace::new(q(), vec![("a".into(), 0), ("b".into(), 1)]).unwrap();
        let w = SuperSpace::new(q(), vec![("x".into(), 1), ("y".into(), 0)]).unwrap();
        let entries = |vals: &[i64], s: &SuperSpace| {
            let mut m = Mat::zero(q(), s.dim(), s.dim());
            let mut k = 0;
            for r in 0..s.dim() {
                for c in 0..s.dim() {
                    if s.parity(r) == s.parity(c) {
                        m.set(r, c, q().from_i64(vals[k % vals.len()]));
                        k += 1;
                    }
                }
            }
            m
        };
        let f = GradedMap::from_total(v.clone(), v.clone(), entries(&[2, -1, 3], &v));
        let g = GradedMap::from_total(w.clone(), w.clone(), entries(&[5, 7, -2], &w));
        assert!(f.is_even() && g.is_even());
        let fg = f.tensor(&g).unwrap();
        // no Koszul signs: entrywise Kronecker product
        let (ft, gt) = (f.total(), g.total());
        for (r, c, s) in fg.total().entries() {
            let (rv, rw) = (r / w.dim(), r % w.dim());
            let (cv, cw) = (c / w.dim(), c % w.dim());
            assert_eq!(*s, ft.get(rv, cv).mul(&gt.get(rw, cw)));
        }
    }

    #[test]
    fn koszul_sign_on_odd_map_odd_argument() {
        // g odd: V = span(v) odd, g: w ↦ z with |w|=0, |z|=1.
        let v = odd_line("v");
        let w0 = SuperSpace::new(q(), vec![("w".into(), 0)]).unwrap();
        let z1 = odd_line("z");
        let mut m = Mat::zero(q(), 1, 1);
        m.set(0, 0, q().one());
        let g = GradedMap::from_total(w0, z1, m);
        assert!(g.is_odd());
        let f = GradedMap::identity(&v);
        let fg = f.tensor(&g).unwrap();
        // (id⊗g)(v⊗w) = (−1)^{|g||v|} v⊗g(w) = −v⊗z
        let img = fg.apply(&fg.source().basis_vector(0));
        assert_eq!(img[0], q().from_i64(-1));
    }
}
