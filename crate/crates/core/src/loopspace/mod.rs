//! Loop spaces of finite-dimensional spaces, truncated to trigonometric
//! polynomials of bounded degree.
//!
//! A morphism `LV₁ → LV₂` is the pointwise lift `T̃` of a linear map
//! `T: V₁ → V₂`, stored as `T` itself. Lifts act term by term on
//! trigonometric coefficients, so the mode cap never changes a result
//! beyond its shape.
//!
//! Hom-sets are read as constant lifts only: every morphism has a unique
//! underlying `T`. Loops of linear maps `t ↦ T(t)` are not morphisms here.

mod loops;

pub use loops::{parse_loop, CoeffFile, Loop, LoopFile, LoopSpaceObj, Mode, MAX_COEFFICIENTS};

use std::fmt;

use crate::category::{Category, Functor, IndexCategory, Product, Scope};
use crate::error::{Error, Result};
use crate::finvect::{basis_morphisms, coev_map, ev_map, swap_map, FinVect, LinMap, VectObj};
use crate::monoidal::{trace, Braiding, DualityData, Monoidal};

/// A lifted linear map `T̃: LV₁ → LV₂`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopMorphism {
    modes: usize,
    map: LinMap,
}

impl LoopMorphism {
    /// `T̃(γ)(t) = T(γ(t))`.
    pub fn lift(map: LinMap, modes: usize) -> Self {
        LoopMorphism { modes, map }
    }

    /// The unique `T` with `f = T̃`.
    pub fn extract(&self) -> &LinMap {
        &self.map
    }

    pub fn src(&self) -> LoopSpaceObj {
        LoopSpaceObj::new(self.map.src().dim, self.modes)
    }

    pub fn dst(&self) -> LoopSpaceObj {
        LoopSpaceObj::new(self.map.dst().dim, self.modes)
    }

    pub fn apply(&self, g: &Loop) -> Result<Loop> {
        if g.object() != self.src() {
            return Err(Error::Shape(format!(
                "{} applied to a loop in {} with {} modes",
                self,
                g.object(),
                g.object().modes
            )));
        }
        g.apply(self.map.matrix())
    }
}

impl fmt::Display for LoopMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.map.matrix();
        if m.rows() == 0 || m.cols() == 0 {
            write!(f, "~0")
        } else {
            write!(f, "~{m}")
        }
    }
}

impl fmt::Debug for LoopMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}: {} -> {}", self.src(), self.dst())
    }
}

/// Loop spaces with a fixed mode cap and lifted maps between them. The
/// monoidal structure is the one induced from `FinVect` by [`Lift`]:
/// `LV₁⊗LV₂ = L(V₁⊗V₂)`, `T̃⊗S̃ = (T⊗S)~`, unit `Lℝ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopCat {
    pub modes: usize,
}

impl LoopCat {
    pub fn new(modes: usize) -> Self {
        LoopCat { modes }
    }

    pub fn obj(&self, dim: usize) -> LoopSpaceObj {
        LoopSpaceObj::new(dim, self.modes)
    }

    pub fn lift(&self, map: LinMap) -> LoopMorphism {
        LoopMorphism::lift(map, self.modes)
    }

    fn check(&self, x: &LoopSpaceObj) -> Result<()> {
        if x.modes == self.modes {
            Ok(())
        } else {
            Err(Error::Config(format!(
                "{x} has mode cap {}, this category uses {}",
                x.modes, self.modes
            )))
        }
    }

    /// `ẽv = (ev)~: L(V⊗V*) → Lℝ`, summing the diagonal pointwise.
    pub fn lifted_ev(&self, n: usize) -> LoopMorphism {
        self.lift(ev_map(n))
    }

    /// `c̃oev = (coev)~: Lℝ → L(V⊗V*)`, `γ ↦ (t ↦ γ(t) Σ eᵢ⊗eᵢ*)`.
    pub fn lifted_coev(&self, n: usize) -> LoopMorphism {
        self.lift(coev_map(n))
    }

    /// Duals of `LV` from the lifted evaluation and coevaluation.
    pub fn duality(&self, n: usize) -> DualityData<LoopCat> {
        let v = self.obj(n);
        DualityData::from_right_evaluation(self, &LoopSwap, v, v, self.lifted_ev(n), self.lifted_coev(n))
            .expect("lifted ev and coev are well typed")
    }

    /// `tr(f)` as an endomorphism of `Lℝ`, applied to `probe`.
    pub fn loop_trace(&self, f: &LoopMorphism, probe: &Loop) -> Result<Loop> {
        let n = f.src().dim;
        let t = trace(self, &LoopSwap, &self.duality(n), f)?;
        t.apply(probe)
    }

    /// Objects `L(ℝ^d)` for the given dims, and lifts of the elementary
    /// matrices between them.
    pub fn scope(&self, dims: &[usize]) -> Scope<LoopCat> {
        Scope::new(
            dims.iter().map(|&d| self.obj(d)).collect(),
            basis_morphisms(dims).into_iter().map(|m| self.lift(m)).collect(),
        )
    }
}

impl Category for LoopCat {
    type Obj = LoopSpaceObj;
    type Mor = LoopMorphism;

    fn source(&self, f: &LoopMorphism) -> LoopSpaceObj {
        f.src()
    }

    fn target(&self, f: &LoopMorphism) -> LoopSpaceObj {
        f.dst()
    }

    fn identity(&self, x: &LoopSpaceObj) -> Result<LoopMorphism> {
        self.check(x)?;
        Ok(self.lift(LinMap::identity(x.dim)))
    }

    fn compose(&self, f: &LoopMorphism, g: &LoopMorphism) -> Result<LoopMorphism> {
        if f.dst() != g.src() {
            return Err(Error::NotComposable {
                f: f.to_string(),
                g: g.to_string(),
                f_target: f.dst().to_string(),
                g_source: g.src().to_string(),
            });
        }
        Ok(self.lift(FinVect.compose(&f.map, &g.map)?))
    }

    fn inverse(&self, f: &LoopMorphism) -> Option<LoopMorphism> {
        FinVect.inverse(&f.map).map(|m| self.lift(m))
    }

    fn contains_object(&self, x: &LoopSpaceObj) -> bool {
        x.modes == self.modes
    }

    fn show_obj(&self, x: &LoopSpaceObj) -> String {
        x.to_string()
    }

    fn show_mor(&self, f: &LoopMorphism) -> String {
        f.to_string()
    }
}

impl Monoidal for LoopCat {
    fn unit(&self) -> LoopSpaceObj {
        self.obj(1)
    }

    fn tensor_obj(&self, x: &LoopSpaceObj, y: &LoopSpaceObj) -> Result<LoopSpaceObj> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.obj(x.dim * y.dim))
    }

    fn tensor_mor(&self, f: &LoopMorphism, g: &LoopMorphism) -> Result<LoopMorphism> {
        self.check(&f.src())?;
        self.check(&g.src())?;
        Ok(self.lift(FinVect.tensor_mor(&f.map, &g.map)?))
    }

    fn associator(&self, x: &LoopSpaceObj, y: &LoopSpaceObj, z: &LoopSpaceObj) -> Result<LoopMorphism> {
        Ok(self.lift(LinMap::identity(x.dim * y.dim * z.dim)))
    }

    fn left_unitor(&self, x: &LoopSpaceObj) -> Result<LoopMorphism> {
        Ok(self.lift(LinMap::identity(x.dim)))
    }

    fn right_unitor(&self, x: &LoopSpaceObj) -> Result<LoopMorphism> {
        Ok(self.lift(LinMap::identity(x.dim)))
    }
}

/// `s̃`: the lift of the coordinate swap. On pointwise tensors it sends
/// `γ₁⊗γ₂` to `γ₂⊗γ₁`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LoopSwap;

impl Braiding<LoopCat> for LoopSwap {
    fn component(&self, cat: &LoopCat, x: &LoopSpaceObj, y: &LoopSpaceObj) -> Result<LoopMorphism> {
        Ok(cat.lift(swap_map(x.dim, y.dim)))
    }

    fn is_symmetric(&self) -> bool {
        true
    }
}

/// `L: V ↦ LV, f ↦ f̃`. Also the pasting functor of the base over the
/// one-element index.
#[derive(Clone, Copy, Debug)]
pub struct Lift {
    pub modes: usize,
}

/// `G: LV ↦ {constant loops} ≅ V, f ↦ T_f`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Constants;

impl Functor<FinVect, LoopCat> for Lift {
    fn map_obj(&self, x: &VectObj) -> Result<LoopSpaceObj> {
        Ok(LoopSpaceObj::new(x.dim, self.modes))
    }

    fn map_mor(&self, f: &LinMap) -> Result<LoopMorphism> {
        Ok(LoopMorphism::lift(f.clone(), self.modes))
    }
}

impl Functor<LoopCat, FinVect> for Constants {
    fn map_obj(&self, x: &LoopSpaceObj) -> Result<VectObj> {
        Ok(VectObj::new(x.dim))
    }

    fn map_mor(&self, f: &LoopMorphism) -> Result<LinMap> {
        Ok(f.map.clone())
    }
}

fn single<T: Clone>(v: &[T]) -> Result<T> {
    match v {
        [x] => Ok(x.clone()),
        _ => Err(Error::Shape(format!("expected one component, got {}", v.len()))),
    }
}

impl Functor<Product<FinVect>, LoopCat> for Lift {
    fn map_obj(&self, x: &Vec<VectObj>) -> Result<LoopSpaceObj> {
        Functor::<FinVect, LoopCat>::map_obj(self, &single(x)?)
    }

    fn map_mor(&self, f: &Vec<LinMap>) -> Result<LoopMorphism> {
        Functor::<FinVect, LoopCat>::map_mor(self, &single(f)?)
    }
}

impl Functor<LoopCat, Product<FinVect>> for Constants {
    fn map_obj(&self, x: &LoopSpaceObj) -> Result<Vec<VectObj>> {
        Ok(vec![Functor::<LoopCat, FinVect>::map_obj(self, x)?])
    }

    fn map_mor(&self, f: &LoopMorphism) -> Result<Vec<LinMap>> {
        Ok(vec![Functor::<LoopCat, FinVect>::map_mor(self, f)?])
    }
}

/// `FinVect` over the one-element index.
pub fn finvect_line() -> Product<FinVect> {
    Product::new(FinVect, IndexCategory::range(1))
}
