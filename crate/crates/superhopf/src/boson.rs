//! Radford bosonization A ⋊ Z₂: the ordinary Hopf algebra on A ⊗ kZ₂ that
//! absorbs the super-symmetry into the grouplike σ, plus the transport of
//! coactions. Bosonizations are non-commutative in general and are verified
//! as bialgebras with antipode.

use crate::algebra::{SuperAlgebra, VerifyMode};
use crate::error::{Error, Result};
use crate::graded_map::GradedMap;
use crate::hopf::HopfSuperAlgebra;
use crate::matrix::Mat;
use crate::scalar::Scalar;
use crate::space::SuperSpace;

#[derive(Debug, Clone)]
pub struct Bosonization {
    a: HopfSuperAlgebra,
    ahat: HopfSuperAlgebra,
}

/// Flat index of `a_k ⊗ σ^eps` in the hat basis: the σ⁰ block then the σ¹
/// block, so golden matrices stay stable.
pub fn hat_index(dim: usize, k: usize, eps: u8) -> usize {
    eps as usize * dim + k
}

fn hat_space(space: &SuperSpace) -> Result<SuperSpace> {
    let mut basis = Vec::with_capacity(2 * space.dim());
    for eps in 0..2u8 {
        let tag = if eps == 0 { "e" } else { "σ" };
        for b in space.basis() {
            basis.push((format!("{}|{}", b.name, tag), 0));
        }
    }
    SuperSpace::new(space.field(), basis)
}

/// The smash-product algebra B ⋊ Z₂ for any super-algebra B:
/// `(b⊗σ^i)(c⊗σ^j) = (−1)^{i|c|} bc ⊗ σ^{i+j}`.
pub fn smash_algebra(b: &SuperAlgebra) -> Result<SuperAlgebra> {
    let field = b.field();
    let dim = b.dim();
    let space = hat_space(b.space())?;
    let mut entries = Vec::new();
    for i in 0..dim {
        for eps in 0..2u8 {
            for j in 0..dim {
                for eta in 0..2u8 {
                    let sign = if eps == 1 && b.space().parity(j) == 1 {
                        field.from_i64(-1)
                    } else {
                        field.one()
                    };
                    for (k, c) in b.basis_product(i, j) {
                        entries.push((
                            hat_index(dim, i, eps),
                            hat_index(dim, j, eta),
                            hat_index(dim, *k, (eps + eta) % 2),
                            c.mul(&sign),
                        ));
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); 2 * dim];
    for (k, c) in b.unit().iter().enumerate() {
        unit[hat_index(dim, k, 0)] = c.clone();
    }
    SuperAlgebra::from_table(space, entries, unit)
}

/// Bosonize a verified Hopf super-algebra. The result is an ordinary Hopf
/// algebra of dimension 2·dim A; its antipode is bijective but in general not
/// an involution.
pub fn bosonize(a: &HopfSuperAlgebra) -> Result<Bosonization> {
    a.expect_verified(VerifyMode::SuperCommutative)?;
    let field = a.field();
    let dim = a.dim();
    let alg = smash_algebra(a.algebra())?;
    let space = alg.space().clone();
    let hdim = 2 * dim;

    // smash co-product: Δ(a⊗σ^i) = Σ (a₍₁₎ ⊗ σ^{i+|a₍₂₎|}) ⊗ (a₍₂₎ ⊗ σ^i)
    let mut comult = Mat::zero(field, hdim * hdim, hdim);
    let mut counit = Mat::zero(field, 1, hdim);
    let mut anti = Mat::zero(field, hdim, hdim);
    for i in 0..dim {
        for eps in 0..2u8 {
            let col = hat_index(dim, i, eps);
            for (j, k, c) in a.comult_of(i) {
                let left = hat_index(dim, j, (eps + a.space().parity(k)) % 2);
                let right = hat_index(dim, k, eps);
                comult.add_to(left * hdim + right, col, &c);
            }
            counit.set(0, col, a.counit_of(i));
            // S(a⊗σ^i) = (−1)^{|a|(i+1)} s(a) ⊗ σ^{i+|a|}: forced by
            // S(σ) = σ and the antihomomorphism property
            let p = a.space().parity(i);
            let sign = if p * ((eps + 1) % 2) == 1 {
                field.from_i64(-1)
            } else {
                field.one()
            };
            let sa = a.antipode().apply_to_basis(i);
            for (k, c) in crate::algebra::to_sparse(&sa) {
                anti.add_to(hat_index(dim, k, (eps + p) % 2), col, &c.mul(&sign));
            }
        }
    }
    let comult = GradedMap::from_total(space.clone(), alg.square().clone(), comult);
    let counit = GradedMap::from_total(space.clone(), SuperSpace::ground(field), counit);
    let antipode = GradedMap::from_total(space.clone(), space, anti);
    let ahat = HopfSuperAlgebra::new(alg, comult, counit, antipode)?;
    ahat.expect_verified(VerifyMode::BialgebraWithAntipode)?;
    if !ahat.antipode().is_bijective() {
        return Err(Error::Inconsistent("bosonized antipode must be bijective".into()));
    }
    Ok(Bosonization {
        a: a.clone(),
        ahat,
    })
}

impl Bosonization {
    pub fn base(&self) -> &HopfSuperAlgebra {
        &self.a
    }

    pub fn ahat(&self) -> &HopfSuperAlgebra {
        &self.ahat
    }

    pub fn dim(&self) -> usize {
        self.ahat.dim()
    }

    pub fn index(&self, k: usize, eps: u8) -> usize {
        hat_index(self.a.dim(), k, eps)
    }

    /// Transport a functional ψ on A to ψ⊗ω on Â, where ω(σ^i) = δ_{i,0}.
    pub fn transport_functional(&self, psi: &[Scalar]) -> Vec<Scalar> {
        let dim = self.a.dim();
        assert_eq!(psi.len(), dim);
        let mut out = vec![self.a.field().zero(); 2 * dim];
        for (k, c) in psi.iter().enumerate() {
            out[hat_index(dim, k, 0)] = c.clone();
        }
        out
    }

    /// The inverse transport: φ ↦ (a ↦ φ(a⊗e)).
    pub fn restrict_functional(&self, phi: &[Scalar]) -> Vec<Scalar> {
        let dim = self.a.dim();
        assert_eq!(phi.len(), 2 * dim);
        (0..dim).map(|k| phi[hat_index(dim, k, 0)].clone()).collect()
    }

    /// Whether a functional on Â vanishes on the A⊗σ block.
    pub fn vanishes_on_sigma_block(&self, phi: &[Scalar]) -> bool {
        let dim = self.a.dim();
        (0..dim).all(|k| phi[hat_index(dim, k, 1)].is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{exterior_hopf, group_hopf};
    use crate::scalar::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn bosonized_line_is_sweedler_like() {
        // dim 4, S(w⊗e) = w⊗σ, S(w⊗σ) = −w⊗e, S² ≠ id, S⁴ = id
        let a = exterior_hopf(1, q()).unwrap();
        let b = bosonize(&a).unwrap();
        assert_eq!(b.dim(), 4);
        let w = 1usize;
        let s = b.ahat().antipode();
        let we = b.index(w, 0);
        let wsigma = b.index(w, 1);
        let img = s.apply_to_basis(we);
        assert!(img[wsigma].is_one() && img.iter().filter(|c| !c.is_zero()).count() == 1);
        let img2 = s.apply_to_basis(wsigma);
        assert_eq!(img2[we], q().from_i64(-1));
        let s2 = s.compose(s).unwrap();
        assert_ne!(s2.total(), Mat::identity(q(), 4));
        let s4 = s2.compose(&s2).unwrap();
        assert_eq!(s4.total(), Mat::identity(q(), 4));
    }

    #[test]
    fn antipode_order_on_exterior_ranks() {
        for n in 1..=3u32 {
            let b = bosonize(&exterior_hopf(n, q()).unwrap()).unwrap();
            let s = b.ahat().antipode();
            let s2 = s.compose(s).unwrap();
            assert_ne!(s2.total(), Mat::identity(q(), b.dim()), "rank {n}");
            let s4 = s2.compose(&s2).unwrap();
            assert_eq!(s4.total(), Mat::identity(q(), b.dim()), "rank {n}");
            assert!(s.is_bijective());
        }
    }

    #[test]
    fn char2_bosonization_is_involutive() {
        // signs vanish in characteristic 2, so S² = id even on odd inputs
        let f2 = FieldSpec::prime_field(2).unwrap();
        let b = bosonize(&exterior_hopf(2, f2).unwrap()).unwrap();
        let s = b.ahat().antipode();
        assert_eq!(s.compose(s).unwrap().total(), Mat::identity(f2, b.dim()));
    }

    #[test]
    fn purely_even_input_gives_involutive_antipode() {
        let z2 = group_hopf(&[2], q()).unwrap();
        let b = bosonize(&z2).unwrap();
        let s = b.ahat().antipode();
        assert_eq!(s.compose(s).unwrap().total(), Mat::identity(q(), 4));
    }

    #[test]
    fn smash_coproduct_counit() {
        // ε̂(a⊗σ^i) = ε(a)
        let a = exterior_hopf(2, q()).unwrap();
        let b = bosonize(&a).unwrap();
        for k in 0..a.dim() {
            for eps in 0..2u8 {
                assert_eq!(
                    b.ahat().counit_of(b.index(k, eps)),
                    a.counit_of(k),
                    "({k},{eps})"
                );
            }
        }
    }

    #[test]
    fn sweedler_relations() {
        // g = 1⊗σ, x = w⊗e satisfy g² = 1, x² = 0, gx = −xg, Δx = g⊗x + x⊗1
        let a = exterior_hopf(1, q()).unwrap();
        let b = bosonize(&a).unwrap();
        let alg = b.ahat().algebra();
        let g = b.index(0, 1);
        let x = b.index(1, 0);
        let gv = alg.space().basis_vector(g);
        let xv = alg.space().basis_vector(x);
        assert_eq!(alg.multiply(&gv, &gv), b.ahat().one());
        assert!(alg.multiply(&xv, &xv).iter().all(Scalar::is_zero));
        let gx = alg.multiply(&gv, &xv);
        let xg = alg.multiply(&xv, &gv);
        let neg: Vec<Scalar> = xg.iter().map(Scalar::neg).collect();
        assert_eq!(gx, neg);
        let dx = b.ahat().comult_of(x);
        assert_eq!(dx.len(), 2);
        assert!(dx.contains(&(g, x, q().one())));
        assert!(dx.contains(&(x, b.index(0, 0), q().one())));
    }
}
