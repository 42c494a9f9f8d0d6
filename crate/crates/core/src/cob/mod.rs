//! Oriented 2-cobordisms in combinatorial form.
//!
//! [`Cob`] has circle counts as objects and [`CobClass`]es as morphisms,
//! with gluing as composition and disjoint union as a strict tensor.
//! [`CobPairs`] has one object per pair of circle counts, standing for the
//! connected genus-0 class between them, and pairs of classes as
//! morphisms. [`Paste`] and [`Decompose`] relate it to `Cob × Cob`.

mod class;

pub use class::{
    enumerate_classes, parse_cob_class, Block, BlockFile, Boundary, CobClass, CobClassFile, MAX_CIRCLES,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::category::{Category, Functor, IndexCategory, Product, Scope};
use crate::error::{Error, Result};
use crate::monoidal::{Braiding, DualityData, Monoidal};

/// Closed oriented 1-manifolds (circle counts) and cobordism classes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Cob;

impl Category for Cob {
    type Obj = usize;
    type Mor = CobClass;

    fn source(&self, f: &CobClass) -> usize {
        f.src()
    }

    fn target(&self, f: &CobClass) -> usize {
        f.dst()
    }

    fn identity(&self, x: &usize) -> Result<CobClass> {
        Ok(CobClass::cylinder(*x))
    }

    fn compose(&self, f: &CobClass, g: &CobClass) -> Result<CobClass> {
        f.glue(g)
    }

    fn inverse(&self, f: &CobClass) -> Option<CobClass> {
        f.inverse()
    }

    fn show_obj(&self, x: &usize) -> String {
        match x {
            0 => "∅".into(),
            1 => "S1".into(),
            k => format!("{k}S1"),
        }
    }

    fn show_mor(&self, f: &CobClass) -> String {
        f.to_string()
    }
}

impl Monoidal for Cob {
    fn unit(&self) -> usize {
        0
    }

    fn tensor_obj(&self, x: &usize, y: &usize) -> Result<usize> {
        Ok(x + y)
    }

    fn tensor_mor(&self, f: &CobClass, g: &CobClass) -> Result<CobClass> {
        Ok(f.disjoint_union(g))
    }

    fn associator(&self, x: &usize, y: &usize, z: &usize) -> Result<CobClass> {
        Ok(CobClass::cylinder(x + y + z))
    }

    fn left_unitor(&self, x: &usize) -> Result<CobClass> {
        Ok(CobClass::cylinder(*x))
    }

    fn right_unitor(&self, x: &usize) -> Result<CobClass> {
        Ok(CobClass::cylinder(*x))
    }

    fn is_strict(&self) -> bool {
        true
    }
}

impl Cob {
    /// `k` circles are self-dual: `ev` caps circle `i` of the dual against
    /// circle `i` of the object, `coev` is the matching family of cups.
    pub fn duality(&self, k: usize) -> DualityData<Cob> {
        let tubes = |side: fn(u32) -> Boundary| -> Vec<Block> {
            (1..=k as u32)
                .map(|i| Block {
                    boundary: vec![side(i), side(k as u32 + i)],
                    genus: 0,
                })
                .collect()
        };
        let ev = CobClass::new(2 * k, 0, tubes(Boundary::Src), Vec::new()).expect("caps partition the boundary");
        let coev = CobClass::new(0, 2 * k, tubes(Boundary::Dst), Vec::new()).expect("cups partition the boundary");
        DualityData::new(k, k, ev, coev)
    }
}

/// The tube family exchanging the two blocks of circles.
#[derive(Clone, Copy, Debug, Default)]
pub struct CobSwap;

impl Braiding<Cob> for CobSwap {
    fn component(&self, _cat: &Cob, x: &usize, y: &usize) -> Result<CobClass> {
        let perm: Vec<usize> = (0..*x).map(|i| y + i).chain(0..*y).collect();
        Ok(CobClass::permutation(&perm))
    }

    fn is_symmetric(&self) -> bool {
        true
    }
}

/// The connected genus-0 class from `x` circles to `y` circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SphereClass {
    pub x: usize,
    pub y: usize,
}

impl SphereClass {
    pub fn new(x: usize, y: usize) -> Self {
        SphereClass { x, y }
    }

    pub fn class(&self) -> CobClass {
        CobClass::connected_genus0(self.x, self.y)
    }
}

impl fmt::Display for SphereClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.class())
    }
}

/// A morphism of [`CobPairs`]: a class on each side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassPair {
    pub first: CobClass,
    pub second: CobClass,
}

impl fmt::Display for ClassPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} ; {})", self.first, self.second)
    }
}

/// Genus-0 connected classes `(W, X, Y)` as objects; a morphism
/// `(W₁,X₁,Y₁) → (W₂,X₂,Y₂)` is a pair of classes `X₁ → X₂`, `Y₁ → Y₂`,
/// composed by gluing each side.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CobPairs;

impl Category for CobPairs {
    type Obj = SphereClass;
    type Mor = ClassPair;

    fn source(&self, f: &ClassPair) -> SphereClass {
        SphereClass::new(f.first.src(), f.second.src())
    }

    fn target(&self, f: &ClassPair) -> SphereClass {
        SphereClass::new(f.first.dst(), f.second.dst())
    }

    fn identity(&self, x: &SphereClass) -> Result<ClassPair> {
        Ok(ClassPair {
            first: CobClass::cylinder(x.x),
            second: CobClass::cylinder(x.y),
        })
    }

    fn compose(&self, f: &ClassPair, g: &ClassPair) -> Result<ClassPair> {
        let first = f.first.glue(&g.first);
        let second = f.second.glue(&g.second);
        match (first, second) {
            (Ok(first), Ok(second)) => Ok(ClassPair { first, second }),
            _ => Err(Error::NotComposable {
                f: f.to_string(),
                g: g.to_string(),
                f_target: self.target(f).to_string(),
                g_source: self.source(g).to_string(),
            }),
        }
    }

    fn inverse(&self, f: &ClassPair) -> Option<ClassPair> {
        Some(ClassPair {
            first: f.first.inverse()?,
            second: f.second.inverse()?,
        })
    }

    fn show_obj(&self, x: &SphereClass) -> String {
        x.to_string()
    }

    fn show_mor(&self, f: &ClassPair) -> String {
        f.to_string()
    }
}

/// `Cob × Cob` over the index `{1, 2}`.
pub fn cob_square() -> Product<Cob> {
    Product::new(Cob, IndexCategory::range(2))
}

fn pair<T: Clone>(v: &[T]) -> Result<(T, T)> {
    match v {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(Error::Shape(format!("expected a pair, got {} components", v.len()))),
    }
}

/// Pasting: `(X, Y)` goes to the connected genus-0 class between them, a
/// pair of classes to itself.
#[derive(Clone, Copy, Debug, Default)]
pub struct Paste;

impl Functor<Product<Cob>, CobPairs> for Paste {
    fn map_obj(&self, x: &Vec<usize>) -> Result<SphereClass> {
        let (a, b) = pair(x)?;
        Ok(SphereClass::new(a, b))
    }

    fn map_mor(&self, f: &Vec<CobClass>) -> Result<ClassPair> {
        let (first, second) = pair(f)?;
        Ok(ClassPair { first, second })
    }
}

/// Decomposition: `(W, X, Y)` goes to `1 ↦ X, 2 ↦ Y`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Decompose;

impl Functor<CobPairs, Product<Cob>> for Decompose {
    fn map_obj(&self, x: &SphereClass) -> Result<Vec<usize>> {
        Ok(vec![x.x, x.y])
    }

    fn map_mor(&self, f: &ClassPair) -> Result<Vec<CobClass>> {
        Ok(vec![f.first.clone(), f.second.clone()])
    }
}

/// Bounds for exhaustive enumeration of classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassBounds {
    /// Circles on each side.
    pub max_circles: usize,
    pub genus_cap: u32,
    pub closed_cap: usize,
}

impl Default for ClassBounds {
    fn default() -> Self {
        ClassBounds {
            max_circles: 2,
            genus_cap: 1,
            closed_cap: 1,
        }
    }
}

/// Objects `0..=max_circles` and every class between them within bounds.
pub fn cob_scope(bounds: ClassBounds, cap: usize) -> Result<Scope<Cob>> {
    let objects: Vec<usize> = (0..=bounds.max_circles).collect();
    let mut morphisms = Vec::new();
    for &s in &objects {
        for &d in &objects {
            morphisms.extend(enumerate_classes(s, d, bounds.genus_cap, bounds.closed_cap));
            if morphisms.len() > cap {
                return Err(Error::SizeCap {
                    what: "cobordism classes in scope".into(),
                    needed: morphisms.len() as u128,
                    cap: cap as u128,
                });
            }
        }
    }
    Ok(Scope::new(objects, morphisms))
}

/// Every pair object with at most `max_circles` on each side, and every
/// pair of in-bounds classes between them. Fails with a size error beyond
/// `cap` morphisms.
pub fn pairs_scope(bounds: ClassBounds, cap: usize) -> Result<Scope<CobPairs>> {
    let side = cob_scope(bounds, cap)?;
    let needed = (side.morphisms.len() as u128).pow(2);
    if needed > cap as u128 {
        return Err(Error::SizeCap {
            what: "class pairs in scope".into(),
            needed,
            cap: cap as u128,
        });
    }
    let mut objects = Vec::new();
    for &x in &side.objects {
        for &y in &side.objects {
            objects.push(SphereClass::new(x, y));
        }
    }
    let mut morphisms = Vec::with_capacity(needed as usize);
    for first in &side.morphisms {
        for second in &side.morphisms {
            morphisms.push(ClassPair {
                first: first.clone(),
                second: second.clone(),
            });
        }
    }
    Ok(Scope::new(objects, morphisms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induced::{induce_tensor_from_base, validate_base, Base, Witness};
    use crate::monoidal::{check_bifunctoriality, check_hexagon, check_pentagon_triangle, check_zigzag, trace};
    use crate::report::all_passed;

    fn small() -> ClassBounds {
        ClassBounds {
            max_circles: 1,
            genus_cap: 1,
            closed_cap: 1,
        }
    }

    #[test]
    fn circles_are_self_dual() {
        for k in 0..=3 {
            let d = Cob.duality(k);
            assert!(all_passed(&check_zigzag(&Cob, &d).unwrap()), "k = {k}");
        }
        let t = trace(&Cob, &CobSwap, &Cob.duality(1), &CobClass::cylinder(1)).unwrap();
        assert_eq!(t, CobClass::new(0, 0, Vec::new(), vec![1]).unwrap());
    }

    #[test]
    fn cob_is_symmetric_monoidal_on_small_scope() {
        let scope = cob_scope(small(), 10_000).unwrap();
        let mut reports = check_bifunctoriality(&Cob, &scope).unwrap();
        reports.extend(check_pentagon_triangle(&Cob, &scope).unwrap());
        reports.extend(check_hexagon(&Cob, &CobSwap, &scope).unwrap());
        assert!(all_passed(&reports), "{reports:?}");
    }

    #[test]
    fn swap_squares_to_identity() {
        let c = CobSwap.component(&Cob, &2, &1).unwrap();
        assert_eq!(c.to_string(), "3->3 [s1,d2 g0] [s2,d3 g0] [s3,d1 g0]");
        let back = CobSwap.component(&Cob, &1, &2).unwrap();
        assert_eq!(c.glue(&back).unwrap(), CobClass::cylinder(3));
    }

    #[test]
    fn scope_caps_are_enforced() {
        assert!(matches!(pairs_scope(ClassBounds::default(), 100), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn pasting_base_induces_disjoint_union_on_pairs() {
        let square = cob_square();
        let base = Base {
            product: &square,
            target: &CobPairs,
            star: Paste,
            decompose: Decompose,
            witness: Witness::Equality,
        };
        let bounds = ClassBounds {
            max_circles: 1,
            genus_cap: 0,
            closed_cap: 0,
        };
        let scope = pairs_scope(bounds, 10_000).unwrap();
        let product_scope = base.product_scope(&scope).unwrap();
        assert!(all_passed(&validate_base(&base, &scope, &product_scope).unwrap()));
        let induced = induce_tensor_from_base(&base, &scope, &product_scope).unwrap();
        let t = &induced.tensor;
        assert_eq!(t.unit(), SphereClass::new(0, 0));
        assert_eq!(t.unit().class(), CobClass::sphere());
        let xy = t.tensor_obj(&SphereClass::new(1, 0), &SphereClass::new(1, 1)).unwrap();
        assert_eq!(xy, SphereClass::new(2, 1));
        assert_eq!(xy.class(), CobClass::copants());
    }
}
