//! Property tests for the linear layer: Koszul-sign bookkeeping, solver
//! exactness, and the structural invariants stated for the tensor calculus.

use proptest::prelude::*;

use superhopf::graded_map::GradedMap;
use superhopf::matrix::Mat;
use superhopf::scalar::{FieldSpec, Scalar};
use superhopf::space::SuperSpace;

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn space(field: FieldSpec, parities: &[u8], tag: &str) -> SuperSpace {
    SuperSpace::new(
        field,
        parities
            .iter()
            .enumerate()
            .map(|(i, &p)| (format!("{tag}{i}"), p))
            .collect(),
    )
    .unwrap()
}

fn parity_vec(max_dim: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..=1, 1..=max_dim)
}

/// A homogeneous map of the given parity between two spaces, with small
/// integer entries.
fn homogeneous_map(
    field: FieldSpec,
    source: &SuperSpace,
    target: &SuperSpace,
    parity: u8,
    entries: &[i64],
) -> GradedMap {
    let mut m = Mat::zero(field, target.dim(), source.dim());
    let mut k = 0;
    for r in 0..target.dim() {
        for c in 0..source.dim() {
            let e = entries[k % entries.len()];
            k += 1;
            if (target.parity(r) + source.parity(c)) % 2 == parity && e != 0 {
                m.set(r, c, field.from_i64(e));
            }
        }
    }
    GradedMap::from_total(source.clone(), target.clone(), m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braiding_is_even_involutive_isomorphism(
        pv in parity_vec(6),
        pw in parity_vec(6),
    ) {
        let v = space(q(), &pv, "v");
        let w = space(q(), &pw, "w");
        let c_vw = GradedMap::braiding(&v, &w).unwrap();
        let c_wv = GradedMap::braiding(&w, &v).unwrap();
        prop_assert!(c_vw.is_even());
        prop_assert!(c_vw.is_bijective());
        let round = c_wv.compose(&c_vw).unwrap();
        prop_assert_eq!(round.total(), Mat::identity(q(), v.dim() * w.dim()));
    }

    #[test]
    fn tensor_map_functorial_with_koszul_sign(
        pv in parity_vec(4),
        pw in parity_vec(4),
        pu in parity_vec(4),
        px in parity_vec(4),
        parities in prop::collection::vec(0u8..=1, 4),
        entries in prop::collection::vec(-3i64..=3, 32),
    ) {
        // chains V1 → V2 → V3 and W1 → W2 → W3 with homogeneous maps
        let v1 = space(q(), &pv, "a");
        let v2 = space(q(), &pw, "b");
        let v3 = space(q(), &pu, "c");
        let w1 = space(q(), &px, "d");
        let w2 = space(q(), &pv, "e");
        let w3 = space(q(), &pw, "f");
        let f = homogeneous_map(q(), &v2, &v3, parities[0], &entries);
        let fp_ = homogeneous_map(q(), &v1, &v2, parities[1], &entries[3..]);
        let g = homogeneous_map(q(), &w2, &w3, parities[2], &entries[7..]);
        let gp = homogeneous_map(q(), &w1, &w2, parities[3], &entries[11..]);
        // (f⊗g)∘(f′⊗g′) = (−1)^{|g||f′|} (f∘f′)⊗(g∘g′)
        let lhs = f.tensor(&g).unwrap().compose(&fp_.tensor(&gp).unwrap()).unwrap();
        let ff = f.compose(&fp_).unwrap();
        let gg = g.compose(&gp).unwrap();
        let mut rhs = ff.tensor(&gg).unwrap();
        if parities[2] * parities[1] == 1 {
            rhs = rhs.scale(&q().from_i64(-1));
        }
        prop_assert_eq!(lhs.total(), rhs.total());
    }

    #[test]
    fn rank_nullity_over_both_fields(
        rows in 1usize..6,
        cols in 1usize..6,
        entries in prop::collection::vec(-4i64..=4, 36),
        p in prop::sample::select(vec![0u64, 2, 3, 7]),
    ) {
        let field = if p == 0 { q() } else { FieldSpec::prime_field(p).unwrap() };
        let mut m = Mat::zero(field, rows, cols);
        let mut k = 0;
        for r in 0..rows {
            for c in 0..cols {
                let e = entries[k % entries.len()];
                k += 1;
                if e != 0 {
                    m.set(r, c, field.from_i64(e));
                }
            }
        }
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        for v in m.kernel_basis() {
            prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solver_residuals_exactly_zero(
        n in 1usize..5,
        entries in prop::collection::vec(-5i64..=5, 25),
        rhs in prop::collection::vec(-5i64..=5, 5),
    ) {
        let mut m = Mat::zero(q(), n, n);
        let mut k = 0;
        for r in 0..n {
            for c in 0..n {
                let e = entries[k % entries.len()];
                k += 1;
                if e != 0 {
                    m.set(r, c, q().from_i64(e));
                }
            }
        }
        let b: Vec<Scalar> = (0..n).map(|i| q().from_i64(rhs[i % rhs.len()])).collect();
        if let Some(x) = m.solve(&b) {
            // the recomputed residual is exactly zero, not merely small
            let res = m.apply(&x);
            for (r, want) in res.iter().zip(&b) {
                prop_assert_eq!(r, want);
            }
        }
    }

    #[test]
    fn scalar_display_parse_roundtrip(
        num in -40i64..=40,
        den in 1i64..=12,
        p in prop::sample::select(vec![0u64, 5, 11]),
    ) {
        let field = if p == 0 { q() } else { FieldSpec::prime_field(p).unwrap() };
        let d = field.from_i64(den);
        prop_assume!(!d.is_zero());
        let s = field.from_i64(num).div(&d);
        let printed = s.to_string();
        let parsed = field.parse_scalar(&printed).unwrap();
        prop_assert_eq!(parsed, s);
    }
}
