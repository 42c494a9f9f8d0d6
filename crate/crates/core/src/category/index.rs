use super::Category;
use crate::error::{Error, Result};
use crate::report::{Failure, Report, Tally};

/// A finite ordered set viewed as a discrete category: the only morphisms
/// are identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCategory {
    elements: Vec<String>,
}

impl IndexCategory {
    pub fn new(elements: Vec<String>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &elements {
            if !seen.insert(e) {
                return Err(Error::Invalid(format!("index element {e} repeated")));
            }
        }
        Ok(IndexCategory { elements })
    }

    /// `{1, 2, …, n}`.
    pub fn range(n: usize) -> Self {
        IndexCategory {
            elements: (1..=n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    /// Position of a named element in the ordering.
    pub fn position(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::Index(name.to_string()))
    }
}

impl Category for IndexCategory {
    type Obj = usize;
    /// The identity of the element at this position.
    type Mor = usize;

    fn source(&self, f: &usize) -> usize {
        *f
    }

    fn target(&self, f: &usize) -> usize {
        *f
    }

    fn identity(&self, x: &usize) -> Result<usize> {
        if *x < self.len() {
            Ok(*x)
        } else {
            Err(Error::Index(x.to_string()))
        }
    }

    fn compose(&self, f: &usize, g: &usize) -> Result<usize> {
        if f == g {
            Ok(*f)
        } else {
            Err(Error::NotComposable {
                f: format!("Id_{}", self.elements[*f]),
                g: format!("Id_{}", self.elements[*g]),
                f_target: self.elements[*f].clone(),
                g_source: self.elements[*g].clone(),
            })
        }
    }

    fn inverse(&self, f: &usize) -> Option<usize> {
        Some(*f)
    }

    fn contains_object(&self, x: &usize) -> bool {
        *x < self.len()
    }

    fn show_obj(&self, x: &usize) -> String {
        self.elements.get(*x).cloned().unwrap_or_else(|| format!("#{x}"))
    }

    fn show_mor(&self, f: &usize) -> String {
        format!("Id_{}", self.show_obj(f))
    }
}

/// A natural transformation between two functors `Λ → B`, each functor
/// given as its tuple of object images.
#[derive(Clone, Debug, PartialEq)]
pub struct NatTransform<C: Category> {
    pub source: Vec<C::Obj>,
    pub target: Vec<C::Obj>,
    pub components: Vec<C::Mor>,
}

impl<C: Category> NatTransform<C> {
    /// Component typing `η_λ: F(λ) → G(λ)` plus naturality. Over an index
    /// category the only morphisms are identities, so every naturality
    /// square is `η_λ ∘ Id = Id ∘ η_λ`; the naturality report says so with
    /// status `vacuous`.
    pub fn check(&self, index: &IndexCategory, base: &C) -> Vec<Report> {
        let mut typing = Tally::new("component-typing");
        let n = index.len();
        if self.source.len() != n || self.target.len() != n || self.components.len() != n {
            typing.fail(Failure::new(
                vec!["arity".into()],
                format!("{}/{}/{}", self.source.len(), self.target.len(), self.components.len()),
                n.to_string(),
            ));
            return vec![typing.finish(), Report::vacuous("naturality")];
        }
        for (i, eta) in self.components.iter().enumerate() {
            typing.check(
                base.source(eta) == self.source[i] && base.target(eta) == self.target[i],
                || {
                    Failure::new(
                        vec![index.elements()[i].clone(), base.show_mor(eta)],
                        format!("{} -> {}", base.show_obj(&base.source(eta)), base.show_obj(&base.target(eta))),
                        format!("{} -> {}", base.show_obj(&self.source[i]), base.show_obj(&self.target[i])),
                    )
                },
            );
        }
        vec![typing.finish(), Report::vacuous("naturality")]
    }
}
