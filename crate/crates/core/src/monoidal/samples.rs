//! Small finite monoidal categories used as fixtures and in tests.

use super::fin::{FinMonoidal, MonoidalFile};
use crate::category::{CategoryFile, CategoryRef, MorphismEntry};

fn leq(i: usize, j: usize) -> String {
    format!("{i}<={j}")
}

/// The chain `0 < 1 < … < n-1` as a thin category, with tensor `max`, unit
/// `0` and identity structure maps. Strict and symmetric.
pub fn max_chain(n: usize) -> FinMonoidal {
    assert!(n > 0, "chain needs at least one element");
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut composition = Vec::new();
    for i in 0..n {
        for j in i..n {
            morphisms.push(MorphismEntry {
                id: leq(i, j),
                src: i.to_string(),
                dst: j.to_string(),
            });
            for k in j..n {
                composition.push([leq(j, k), leq(i, j), leq(i, k)]);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut tensor_mor = Vec::new();
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            tensor_mor.push([leq(i, j), leq(k, l), leq(i.max(k), j.max(l))]);
        }
    }
    let mut tensor_obj = Vec::new();
    let mut associator = Vec::new();
    let mut braiding = Vec::new();
    for x in 0..n {
        for y in 0..n {
            tensor_obj.push([x.to_string(), y.to_string(), x.max(y).to_string()]);
            let m = x.max(y);
            braiding.push([x.to_string(), y.to_string(), leq(m, m)]);
            for z in 0..n {
                let m = m.max(z);
                associator.push([x.to_string(), y.to_string(), z.to_string(), leq(m, m)]);
            }
        }
    }
    let unitors: Vec<[String; 2]> = (0..n).map(|x| [x.to_string(), leq(x, x)]).collect();
    let file = MonoidalFile {
        category: CategoryRef::Inline(CategoryFile {
            objects: objects.clone(),
            morphisms,
            identity: (0..n).map(|i| (i.to_string(), leq(i, i))).collect(),
            composition,
        }),
        unit: "0".into(),
        strict: true,
        tensor_obj,
        tensor_mor,
        associator,
        left_unitor: unitors.clone(),
        right_unitor: unitors,
        braiding: Some(braiding),
        symmetric: true,
    };
    FinMonoidal::from_file(&file, |_| unreachable!()).expect("chain tables are total")
}

/// The cyclic group `Z/n` as a one-object category, tensor given by the
/// group operation. Strict and symmetric.
pub fn cyclic_group(n: usize) -> FinMonoidal {
    assert!(n > 0, "group order must be positive");
    let g = |i: usize| format!("g{}", i % n);
    let star = "*".to_string();
    let mut composition = Vec::new();
    let mut tensor_mor = Vec::new();
    for i in 0..n {
        for j in 0..n {
            composition.push([g(j), g(i), g(i + j)]);
            tensor_mor.push([g(i), g(j), g(i + j)]);
        }
    }
    let file = MonoidalFile {
        category: CategoryRef::Inline(CategoryFile {
            objects: vec![star.clone()],
            morphisms: (0..n)
                .map(|i| MorphismEntry {
                    id: g(i),
                    src: star.clone(),
                    dst: star.clone(),
                })
                .collect(),
            identity: [(star.clone(), g(0))].into_iter().collect(),
            composition,
        }),
        unit: star.clone(),
        strict: true,
        tensor_obj: vec![[star.clone(), star.clone(), star.clone()]],
        tensor_mor,
        associator: vec![[star.clone(), star.clone(), star.clone(), g(0)]],
        left_unitor: vec![[star.clone(), g(0)]],
        right_unitor: vec![[star.clone(), g(0)]],
        braiding: Some(vec![[star.clone(), star.clone(), g(0)]]),
        symmetric: true,
    };
    FinMonoidal::from_file(&file, |_| unreachable!()).expect("group tables are total")
}
