//! Writes the JSON fixtures used by the CLI demo and tests.
//!
//! Usage: `cargo run -p moncat --example gen_fixtures -- [DIR]` (default
//! `fixtures`).

use std::path::{Path, PathBuf};

use moncat::category::{CategoryRef, IndexCategory, Product};
use moncat::cob::{CobClass, CobClassFile};
use moncat::finvect::{LinMap, LinMapFile};
use moncat::induced::{BaseFile, DualityFile, ImageFile, LaxFile, MapFile, MonoidalRef, ProductBraiding};
use moncat::linalg::{q, Matrix};
use moncat::loopspace::{Loop, LoopFile};
use moncat::monoidal::samples::{cyclic_group, max_chain};
use moncat::monoidal::{FinMonoidal, MonoidalFile};
use serde::Serialize;

fn write(dir: &Path, name: &str, value: &impl Serialize) {
    let mut text = serde_json::to_string_pretty(value).expect("fixture serializes");
    text.push('\n');
    std::fs::write(dir.join(name), text).unwrap_or_else(|e| panic!("writing {name}: {e}"));
}

fn square(m: &FinMonoidal) -> FinMonoidal {
    let b = ProductBraiding(m.braiding().expect("samples are braided"));
    FinMonoidal::tabulate(&Product::new(m.clone(), IndexCategory::range(2)), Some(&b)).expect("square tabulates")
}

fn category_of(m: &MonoidalFile) -> moncat::category::CategoryFile {
    match &m.category {
        CategoryRef::Inline(c) => c.clone(),
        CategoryRef::Path(_) => unreachable!("tabulated files are inline"),
    }
}

/// `(a,b) ↦ pick(a,b)` on objects and on morphisms of a thin chain.
fn chain_square_map(n: usize, pick: impl Fn(usize, usize) -> usize) -> MapFile {
    let mut out = MapFile::default();
    for a in 0..n {
        for b in 0..n {
            out.object_map.insert(format!("({a},{b})"), pick(a, b).to_string());
        }
    }
    for (i, j) in (0..n).flat_map(|i| (i..n).map(move |j| (i, j))) {
        for (k, l) in (0..n).flat_map(|k| (k..n).map(move |l| (k, l))) {
            out.morphism_map
                .insert(format!("({i}<={j},{k}<={l})"), format!("{}<={}", pick(i, k), pick(j, l)));
        }
    }
    out
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir).expect("fixture directory");

    let chain = max_chain(3);
    let chain_file = chain.to_file();
    let chain_sq_file = square(&chain).to_file();
    write(&dir, "chain3.json", &chain_file);
    write(&dir, "chain3_category.json", &category_of(&chain_file));
    write(&dir, "chain3_square.json", &chain_sq_file);
    write(&dir, "chain3_square_category.json", &category_of(&chain_sq_file));

    let projection = chain_square_map(3, |a, _| a);
    write(
        &dir,
        "projection.json",
        &ImageFile {
            source: MonoidalRef::Path("chain3_square.json".into()),
            target: CategoryRef::Path("chain3_category.json".into()),
            functor: projection.clone(),
        },
    );
    write(
        &dir,
        "projection_functor.json",
        &moncat::category::FunctorFile {
            source: CategoryRef::Path("chain3_square_category.json".into()),
            target: CategoryRef::Path("chain3_category.json".into()),
            object_map: projection.object_map,
            morphism_map: projection.morphism_map,
        },
    );
    write(
        &dir,
        "min_functor.json",
        &ImageFile {
            source: MonoidalRef::Path("chain3_square.json".into()),
            target: CategoryRef::Path("chain3_category.json".into()),
            functor: chain_square_map(3, usize::min),
        },
    );

    let c = chain.category();
    let mut into = MapFile::default();
    let mut back = MapFile::default();
    for x in c.object_ids() {
        into.object_map.insert(format!("({})", c.obj_name(x)), c.obj_name(x).into());
        back.object_map.insert(c.obj_name(x).into(), format!("({})", c.obj_name(x)));
    }
    for f in c.morphism_ids() {
        into.morphism_map.insert(format!("({})", c.mor_name(f)), c.mor_name(f).into());
        back.morphism_map.insert(c.mor_name(f).into(), format!("({})", c.mor_name(f)));
    }
    write(
        &dir,
        "trivial_base.json",
        &BaseFile {
            base: MonoidalRef::Path("chain3.json".into()),
            target: CategoryRef::Path("chain3_category.json".into()),
            index: vec!["1".into()],
            pasting: into,
            decomposition: back,
            witness: None,
        },
    );

    let identity = MapFile {
        object_map: c.object_ids().map(|x| (c.obj_name(x).into(), c.obj_name(x).into())).collect(),
        morphism_map: c.morphism_ids().map(|f| (c.mor_name(f).into(), c.mor_name(f).into())).collect(),
    };
    write(
        &dir,
        "identity_lax.json",
        &LaxFile {
            source: MonoidalRef::Path("chain3.json".into()),
            target: MonoidalRef::Path("chain3.json".into()),
            functor: identity,
            comparison: None,
            unit_map: None,
        },
    );

    let z2 = cyclic_group(2);
    write(&dir, "z2.json", &z2.to_file());
    write(&dir, "z2_square.json", &square(&z2).to_file());
    write(
        &dir,
        "z2_duality.json",
        &DualityFile {
            monoidal: MonoidalRef::Path("z2.json".into()),
            object: "*".into(),
            dual: "*".into(),
            ev: "g1".into(),
            coev: "g1".into(),
        },
    );
    write(
        &dir,
        "z2_square_duality.json",
        &DualityFile {
            monoidal: MonoidalRef::Path("z2_square.json".into()),
            object: "(*,*)".into(),
            dual: "(*,*)".into(),
            ev: "(g1,g0)".into(),
            coev: "(g1,g0)".into(),
        },
    );
    let mut ev1 = MapFile::default();
    ev1.object_map.insert("(*,*)".into(), "*".into());
    for i in 0..2 {
        for j in 0..2 {
            ev1.morphism_map.insert(format!("(g{i},g{j})"), format!("g{i}"));
        }
    }
    write(
        &dir,
        "ev1_lax.json",
        &LaxFile {
            source: MonoidalRef::Path("z2_square.json".into()),
            target: MonoidalRef::Path("z2.json".into()),
            functor: ev1,
            comparison: None,
            unit_map: None,
        },
    );

    let z3 = cyclic_group(3);
    let star = z3.category().object("*").expect("one object");
    let g1 = z3.category().morphism("g1").expect("generator");
    write(&dir, "z3_bad_associator.json", &z3.with_associator(star, star, star, g1).to_file());

    write(&dir, "disk.json", &CobClassFile::from_class(&CobClass::disk(true)));
    write(&dir, "disk_rev.json", &CobClassFile::from_class(&CobClass::disk(false)));
    write(&dir, "pants.json", &CobClassFile::from_class(&CobClass::pants()));
    write(&dir, "copants.json", &CobClassFile::from_class(&CobClass::copants()));

    let diag = Matrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]);
    write(&dir, "diag124.json", &LinMapFile::from_map(&LinMap::from_matrix(diag)));
    write(&dir, "const_one.json", &LoopFile::from_loop(&Loop::constant(2, vec![q(1)])));

    println!("fixtures written to {}", dir.display());
}
