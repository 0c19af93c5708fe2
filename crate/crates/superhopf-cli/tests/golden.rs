//! Golden-file pinning for the gallery: built-ins are generated, never
//! stored, and these tests pin their emitted canonical form. Regenerate with
//! `BLESS=1 cargo test -p superhopf-cli --test golden`.

use std::fs;
use std::path::PathBuf;

use superhopf::algebra::VerifyMode;
use superhopf::boson::bosonize;
use superhopf::comodule::{alpha_q_bundle, alpha_q_hopf, exterior_algebra};
use superhopf::hopf::{exterior_hopf, group_hopf};
use superhopf::laurent::borel_carrier;
use superhopf::lie;
use superhopf::scalar::FieldSpec;
use superhopf::specfile::{self, ActionDoc, AlgebraDoc, LaurentDoc, LieDoc, SpecDocument};

fn gallery_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("gallery")
}

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

fn gallery_docs() -> Vec<(&'static str, String)> {
    let mut docs = Vec::new();
    let ext2 = exterior_hopf(2, q()).unwrap();
    docs.push((
        "exterior2.alg",
        AlgebraDoc::from_hopf(&ext2, VerifyMode::SuperCommutative).emit(),
    ));
    let z2 = group_hopf(&[2], q()).unwrap();
    docs.push((
        "z2.alg",
        AlgebraDoc::from_hopf(&z2, VerifyMode::SuperCommutative).emit(),
    ));
    let sweedler = bosonize(&exterior_hopf(1, q()).unwrap()).unwrap();
    docs.push((
        "sweedler.alg",
        AlgebraDoc::from_hopf(sweedler.ahat(), VerifyMode::BialgebraWithAntipode).emit(),
    ));
    let f3 = FieldSpec::prime_field(3).unwrap();
    let a = alpha_q_hopf(3, 1).unwrap();
    docs.push((
        "alphaq31_A.alg",
        AlgebraDoc::from_hopf(&a, VerifyMode::SuperCommutative).emit(),
    ));
    let c = exterior_algebra(2, f3).unwrap();
    let tau = c.space().basis_vector(3);
    let bundle = alpha_q_bundle(3, 1, &c, &tau).unwrap();
    docs.push((
        "alphaq31_B.alg",
        AlgebraDoc::from_algebra(bundle.base(), VerifyMode::SuperCommutative).emit(),
    ));
    docs.push((
        "alphaq31.act",
        ActionDoc::from_bundle(&bundle, "alphaq31_A.alg", "alphaq31_B.alg").emit(),
    ));
    docs.push(("borel.lie", LieDoc::from_lie(&lie::borel(q())).emit()));
    docs.push(("gl11.lie", LieDoc::from_lie(&lie::gl11(q())).emit()));
    docs.push(("osp12.lie", LieDoc::from_lie(&lie::osp12(q())).emit()));
    docs.push((
        "abelian_odd4.lie",
        LieDoc::from_lie(&lie::abelian_odd(4, q())).emit(),
    ));
    docs.push((
        "borel_type4.lie",
        LieDoc::from_lie(&lie::borel_type(4, q())).emit(),
    ));
    docs.push((
        "borel.laurent",
        LaurentDoc::from_carrier(&borel_carrier(q())).emit(),
    ));
    let dual_a = superhopf::hopf::dual_hopf(&alpha_q_hopf(3, 1).unwrap()).unwrap();
    docs.push((
        "dual_alphaq31.alg",
        AlgebraDoc::from_hopf(&dual_a, VerifyMode::SuperCommutative).emit(),
    ));
    let ext1_z2 = superhopf::hopf::tensor_hopf(
        &exterior_hopf(1, q()).unwrap(),
        &group_hopf(&[2], q()).unwrap(),
    )
    .unwrap();
    docs.push((
        "ext1_z2.alg",
        AlgebraDoc::from_hopf(&ext1_z2, VerifyMode::SuperCommutative).emit(),
    ));
    docs
}

#[test]
fn gallery_files_match_generators() {
    let dir = gallery_dir();
    let bless = std::env::var("BLESS").is_ok();
    if bless {
        fs::create_dir_all(&dir).unwrap();
    }
    for (name, text) in gallery_docs() {
        let path = dir.join(name);
        if bless {
            fs::write(&path, &text).unwrap();
            continue;
        }
        let stored = fs::read_to_string(&path)
            .unwrap_or_else(|_| panic!("missing golden file {name}; run with BLESS=1"));
        assert_eq!(stored, text, "{name} drifted from its generator");
    }
}

#[test]
fn gallery_files_round_trip() {
    for (name, text) in gallery_docs() {
        let doc = specfile::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(doc.emit(), text, "{name} is not canonical");
    }
}

#[test]
fn gallery_documents_rebuild_verified_objects() {
    for (name, text) in gallery_docs() {
        match specfile::parse(&text).unwrap() {
            SpecDocument::Algebra(d) => {
                if d.comult.is_some() {
                    let h = d.to_hopf().unwrap_or_else(|e| panic!("{name}: {e}"));
                    assert!(h.verify(d.mode).is_ok(), "{name}");
                } else {
                    let a = d.to_algebra().unwrap();
                    assert!(a.verify_algebra(d.mode).is_ok(), "{name}");
                }
            }
            SpecDocument::Lie(d) => {
                d.to_lie().unwrap().expect_verified().unwrap();
            }
            SpecDocument::Laurent(d) => {
                d.to_carrier().unwrap().verify_window(3).unwrap();
            }
            SpecDocument::Action(_) => {}
        }
    }
}
