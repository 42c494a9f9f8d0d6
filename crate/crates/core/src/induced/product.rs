use crate::category::Product;
use crate::error::{Error, Result};
use crate::monoidal::{Braiding, DualityData, Monoidal};

fn zip_map<A, B, T>(a: &[A], b: &[B], f: impl Fn(&A, &B) -> Result<T>) -> Result<Vec<T>> {
    if a.len() != b.len() {
        return Err(Error::Shape(format!("tuples of length {} and {}", a.len(), b.len())));
    }
    a.iter().zip(b).map(|(x, y)| f(x, y)).collect()
}

/// Componentwise tensor `(F⊗′G)(λ) = F(λ)⊗G(λ)` with unit `λ ↦ I`.
impl<M: Monoidal> Monoidal for Product<M> {
    fn unit(&self) -> Vec<M::Obj> {
        vec![self.base.unit(); self.arity()]
    }

    fn tensor_obj(&self, x: &Vec<M::Obj>, y: &Vec<M::Obj>) -> Result<Vec<M::Obj>> {
        zip_map(x, y, |a, b| self.base.tensor_obj(a, b))
    }

    fn tensor_mor(&self, f: &Vec<M::Mor>, g: &Vec<M::Mor>) -> Result<Vec<M::Mor>> {
        zip_map(f, g, |a, b| self.base.tensor_mor(a, b))
    }

    fn associator(&self, x: &Vec<M::Obj>, y: &Vec<M::Obj>, z: &Vec<M::Obj>) -> Result<Vec<M::Mor>> {
        let xy = zip_map(x, y, |a, b| Ok((a.clone(), b.clone())))?;
        zip_map(&xy, z, |(a, b), c| self.base.associator(a, b, c))
    }

    fn left_unitor(&self, x: &Vec<M::Obj>) -> Result<Vec<M::Mor>> {
        x.iter().map(|a| self.base.left_unitor(a)).collect()
    }

    fn right_unitor(&self, x: &Vec<M::Obj>) -> Result<Vec<M::Mor>> {
        x.iter().map(|a| self.base.right_unitor(a)).collect()
    }

    fn is_strict(&self) -> bool {
        self.base.is_strict()
    }
}

/// A braiding on the base applied in every component.
#[derive(Clone, Copy, Debug)]
pub struct ProductBraiding<B>(pub B);

impl<M: Monoidal, B: Braiding<M>> Braiding<Product<M>> for ProductBraiding<B> {
    fn component(&self, cat: &Product<M>, x: &Vec<M::Obj>, y: &Vec<M::Obj>) -> Result<Vec<M::Mor>> {
        zip_map(x, y, |a, b| self.0.component(&cat.base, a, b))
    }

    fn is_symmetric(&self) -> bool {
        self.0.is_symmetric()
    }
}

/// The componentwise dual `F*(λ) = F(λ)*` with componentwise evaluation
/// and coevaluation. Refuses, naming the index element, when a component
/// has no duality data.
pub fn dual_in_product<M: Monoidal>(
    product: &Product<M>,
    object: &Vec<M::Obj>,
    duals: impl Fn(&M::Obj) -> Option<DualityData<M>>,
) -> Result<DualityData<Product<M>>> {
    if object.len() != product.arity() {
        return Err(Error::Shape(format!(
            "object has {} components, index has {}",
            object.len(),
            product.arity()
        )));
    }
    let mut dual = Vec::with_capacity(object.len());
    let mut ev = Vec::with_capacity(object.len());
    let mut coev = Vec::with_capacity(object.len());
    for (k, x) in object.iter().enumerate() {
        let d = duals(x).ok_or_else(|| Error::Refused {
            reason: format!(
                "component {} = {} has no duality data",
                product.index.elements()[k],
                product.base.show_obj(x)
            ),
            reports: Vec::new(),
        })?;
        if d.object != *x {
            return Err(Error::Invalid(format!(
                "duality data at component {} is for {}, not {}",
                product.index.elements()[k],
                product.base.show_obj(&d.object),
                product.base.show_obj(x)
            )));
        }
        dual.push(d.dual);
        ev.push(d.ev);
        coev.push(d.coev);
    }
    Ok(DualityData::new(object.clone(), dual, ev, coev))
}
