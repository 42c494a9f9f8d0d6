use super::{Braiding, DualityData, Monoidal};
use crate::category::{compose_chain, has_type, Category, Scope};
use crate::error::{Error, Result};
use crate::report::{Failure, Report, Tally};

/// Records `lhs == rhs`. A typing failure while building either side is a
/// counterexample, not an error: it means the supplied structure is broken
/// at that instance.
pub(crate) fn compare<C: Category>(
    cat: &C,
    tally: &mut Tally,
    witness: impl FnOnce() -> Vec<String>,
    lhs: Result<C::Mor>,
    rhs: Result<C::Mor>,
) -> Result<()> {
    let show = |r: &std::result::Result<C::Mor, String>| match r {
        Ok(m) => cat.show_mor(m),
        Err(e) => format!("<{e}>"),
    };
    let lhs = soften(lhs)?;
    let rhs = soften(rhs)?;
    match (&lhs, &rhs) {
        (Ok(l), Ok(r)) if l == r => tally.pass(),
        _ => tally.fail(Failure::new(witness(), show(&lhs), show(&rhs))),
    }
    Ok(())
}

fn soften<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ (Error::Wiring { .. } | Error::NotComposable { .. })) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

fn names<C: Category>(cat: &C, objs: &[&C::Obj]) -> Vec<String> {
    objs.iter().map(|x| cat.show_obj(x)).collect()
}

fn arrow<C: Category>(cat: &C, src: &C::Obj, dst: &C::Obj) -> String {
    format!("{} -> {}", cat.show_obj(src), cat.show_obj(dst))
}

fn typing<C: Category>(cat: &C, f: &C::Mor) -> String {
    arrow(cat, &cat.source(f), &cat.target(f))
}

/// Tensor typing, `Id_X ⊗ Id_Y = Id_{X⊗Y}` and the interchange law
/// `(g∘f) ⊗ (k∘h) = (g⊗k) ∘ (f⊗h)` over every pair of composable pairs in
/// the scope.
pub fn check_bifunctoriality<M: Monoidal>(m: &M, scope: &Scope<M>) -> Result<Vec<Report>> {
    scope.ensure_known(m)?;

    let mut ty = Tally::new("tensor-typing");
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            let fg = m.tensor_mor(f, g)?;
            let src = m.tensor_obj(&m.source(f), &m.source(g))?;
            let dst = m.tensor_obj(&m.target(f), &m.target(g))?;
            ty.check(has_type(m, &fg, &src, &dst), || {
                Failure::new(vec![m.show_mor(f), m.show_mor(g)], typing(m, &fg), arrow(m, &src, &dst))
            });
        }
    }

    let mut ids = Tally::new("tensor-identity");
    for x in &scope.objects {
        for y in &scope.objects {
            let lhs = m.tensor_mor(&m.identity(x)?, &m.identity(y)?);
            let rhs = m.tensor_obj(x, y).and_then(|xy| m.identity(&xy));
            compare(m, &mut ids, || names(m, &[x, y]), lhs, rhs)?;
        }
    }

    let mut pairs = Vec::new();
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            if m.target(f) == m.source(g) {
                pairs.push((f, g, m.compose(f, g)?));
            }
        }
    }
    let mut inter = Tally::new("interchange");
    for (f, g, gf) in &pairs {
        for (h, k, kh) in &pairs {
            let lhs = m.tensor_mor(gf, kh);
            let rhs = (|| {
                let fh = m.tensor_mor(f, h)?;
                let gk = m.tensor_mor(g, k)?;
                m.compose(&fh, &gk)
            })();
            compare(
                m,
                &mut inter,
                || vec![m.show_mor(f), m.show_mor(g), m.show_mor(h), m.show_mor(k)],
                lhs,
                rhs,
            )?;
        }
    }

    Ok(vec![ty.finish(), ids.finish(), inter.finish()])
}

/// Structural isomorphisms, pentagon and triangle. Strict carriers are
/// checked by object equalities and identity structure maps.
pub fn check_pentagon_triangle<M: Monoidal>(m: &M, scope: &Scope<M>) -> Result<Vec<Report>> {
    scope.ensure_known(m)?;
    let objs = &scope.objects;
    let unit = m.unit();
    if m.is_strict() {
        return strict_coherence(m, objs, &unit);
    }

    let mut iso = Tally::new("structural-isos");
    for x in objs {
        for y in objs {
            for z in objs {
                let a = m.associator(x, y, z)?;
                let src = m.tensor_obj(&m.tensor_obj(x, y)?, z)?;
                let dst = m.tensor_obj(x, &m.tensor_obj(y, z)?)?;
                iso.check(has_type(m, &a, &src, &dst) && m.inverse(&a).is_some(), || {
                    let mut w = vec!["a".to_string()];
                    w.extend(names(m, &[x, y, z]));
                    Failure::new(w, typing(m, &a), format!("invertible {}", arrow(m, &src, &dst)))
                });
            }
        }
        let xu = m.tensor_obj(x, &unit)?;
        let ux = m.tensor_obj(&unit, x)?;
        let l = m.left_unitor(x)?;
        iso.check(has_type(m, &l, &ux, x) && m.inverse(&l).is_some(), || {
            Failure::new(vec!["λ".into(), m.show_obj(x)], typing(m, &l), format!("invertible {}", arrow(m, &ux, x)))
        });
        let r = m.right_unitor(x)?;
        iso.check(has_type(m, &r, &xu, x) && m.inverse(&r).is_some(), || {
            Failure::new(vec!["ρ".into(), m.show_obj(x)], typing(m, &r), format!("invertible {}", arrow(m, &xu, x)))
        });
    }

    let mut pent = Tally::new("pentagon");
    for w in objs {
        for x in objs {
            for y in objs {
                for z in objs {
                    let lhs = (|| {
                        let wx = m.tensor_obj(w, x)?;
                        let yz = m.tensor_obj(y, z)?;
                        compose_chain(
                            m,
                            &[
                                ("a_{W⊗X,Y,Z}", m.associator(&wx, y, z)?),
                                ("a_{W,X,Y⊗Z}", m.associator(w, x, &yz)?),
                            ],
                        )
                    })();
                    let rhs = (|| {
                        let xy = m.tensor_obj(x, y)?;
                        compose_chain(
                            m,
                            &[
                                ("a_{W,X,Y}⊗Id_Z", m.tensor_mor(&m.associator(w, x, y)?, &m.identity(z)?)?),
                                ("a_{W,X⊗Y,Z}", m.associator(w, &xy, z)?),
                                ("Id_W⊗a_{X,Y,Z}", m.tensor_mor(&m.identity(w)?, &m.associator(x, y, z)?)?),
                            ],
                        )
                    })();
                    compare(m, &mut pent, || names(m, &[w, x, y, z]), lhs, rhs)?;
                }
            }
        }
    }

    let mut tri = Tally::new("triangle");
    for x in objs {
        for y in objs {
            let lhs = (|| {
                compose_chain(
                    m,
                    &[
                        ("a_{X,I,Y}", m.associator(x, &unit, y)?),
                        ("Id_X⊗λ_Y", m.tensor_mor(&m.identity(x)?, &m.left_unitor(y)?)?),
                    ],
                )
            })();
            let rhs = (|| m.tensor_mor(&m.right_unitor(x)?, &m.identity(y)?))();
            compare(m, &mut tri, || names(m, &[x, y]), lhs, rhs)?;
        }
    }

    Ok(vec![iso.finish(), pent.finish(), tri.finish()])
}

fn strict_coherence<M: Monoidal>(m: &M, objs: &[M::Obj], unit: &M::Obj) -> Result<Vec<Report>> {
    let mut assoc = Tally::new("pentagon");
    for x in objs {
        for y in objs {
            for z in objs {
                let l = m.tensor_obj(&m.tensor_obj(x, y)?, z)?;
                let r = m.tensor_obj(x, &m.tensor_obj(y, z)?)?;
                let a = m.associator(x, y, z)?;
                let ok = l == r && a == m.identity(&l)?;
                assoc.check(ok, || {
                    Failure::new(
                        names(m, &[x, y, z]),
                        format!("(XY)Z = {}, a = {}", m.show_obj(&l), m.show_mor(&a)),
                        format!("X(YZ) = {}, a = identity", m.show_obj(&r)),
                    )
                });
            }
        }
    }
    let mut units = Tally::new("triangle");
    for x in objs {
        let ux = m.tensor_obj(unit, x)?;
        let xu = m.tensor_obj(x, unit)?;
        let ok = ux == *x
            && xu == *x
            && m.left_unitor(x)? == m.identity(x)?
            && m.right_unitor(x)? == m.identity(x)?;
        units.check(ok, || {
            Failure::new(
                names(m, &[x]),
                format!("I⊗X = {}, X⊗I = {}", m.show_obj(&ux), m.show_obj(&xu)),
                format!("{} with identity unitors", m.show_obj(x)),
            )
        });
    }
    Ok(vec![assoc.finish(), units.finish()])
}

/// Braiding typing and invertibility, naturality, both hexagons, and for
/// symmetric braidings `C_{Y,X} ∘ C_{X,Y} = Id`.
pub fn check_hexagon<M: Monoidal, B: Braiding<M>>(m: &M, b: &B, scope: &Scope<M>) -> Result<Vec<Report>> {
    scope.ensure_known(m)?;
    let objs = &scope.objects;

    let mut iso = Tally::new("braiding-isos");
    for x in objs {
        for y in objs {
            let c = b.component(m, x, y)?;
            let src = m.tensor_obj(x, y)?;
            let dst = m.tensor_obj(y, x)?;
            iso.check(has_type(m, &c, &src, &dst) && m.inverse(&c).is_some(), || {
                Failure::new(names(m, &[x, y]), typing(m, &c), format!("invertible {}", arrow(m, &src, &dst)))
            });
        }
    }

    let mut nat = Tally::new("braiding-naturality");
    for f in &scope.morphisms {
        for g in &scope.morphisms {
            let lhs = (|| {
                let c = b.component(m, &m.target(f), &m.target(g))?;
                compose_chain(m, &[("f⊗g", m.tensor_mor(f, g)?), ("C_{X',Y'}", c)])
            })();
            let rhs = (|| {
                let c = b.component(m, &m.source(f), &m.source(g))?;
                compose_chain(m, &[("C_{X,Y}", c), ("g⊗f", m.tensor_mor(g, f)?)])
            })();
            compare(m, &mut nat, || vec![m.show_mor(f), m.show_mor(g)], lhs, rhs)?;
        }
    }

    let mut h1 = Tally::new("hexagon-1");
    let mut h2 = Tally::new("hexagon-2");
    for x in objs {
        for y in objs {
            for z in objs {
                let lhs = (|| {
                    let yz = m.tensor_obj(y, z)?;
                    compose_chain(
                        m,
                        &[
                            ("a_{X,Y,Z}", m.associator(x, y, z)?),
                            ("C_{X,Y⊗Z}", b.component(m, x, &yz)?),
                            ("a_{Y,Z,X}", m.associator(y, z, x)?),
                        ],
                    )
                })();
                let rhs = (|| {
                    compose_chain(
                        m,
                        &[
                            ("C_{X,Y}⊗Id_Z", m.tensor_mor(&b.component(m, x, y)?, &m.identity(z)?)?),
                            ("a_{Y,X,Z}", m.associator(y, x, z)?),
                            ("Id_Y⊗C_{X,Z}", m.tensor_mor(&m.identity(y)?, &b.component(m, x, z)?)?),
                        ],
                    )
                })();
                compare(m, &mut h1, || names(m, &[x, y, z]), lhs, rhs)?;

                let lhs = (|| {
                    let xy = m.tensor_obj(x, y)?;
                    compose_chain(
                        m,
                        &[
                            ("a⁻¹_{X,Y,Z}", m.associator_inv(x, y, z)?),
                            ("C_{X⊗Y,Z}", b.component(m, &xy, z)?),
                            ("a⁻¹_{Z,X,Y}", m.associator_inv(z, x, y)?),
                        ],
                    )
                })();
                let rhs = (|| {
                    compose_chain(
                        m,
                        &[
                            ("Id_X⊗C_{Y,Z}", m.tensor_mor(&m.identity(x)?, &b.component(m, y, z)?)?),
                            ("a⁻¹_{X,Z,Y}", m.associator_inv(x, z, y)?),
                            ("C_{X,Z}⊗Id_Y", m.tensor_mor(&b.component(m, x, z)?, &m.identity(y)?)?),
                        ],
                    )
                })();
                compare(m, &mut h2, || names(m, &[x, y, z]), soften_inv(lhs), soften_inv(rhs))?;
            }
        }
    }

    let mut out = vec![iso.finish(), nat.finish(), h1.finish(), h2.finish()];
    if b.is_symmetric() {
        let mut sym = Tally::new("symmetry");
        for x in objs {
            for y in objs {
                let lhs = (|| compose_chain(m, &[("C_{X,Y}", b.component(m, x, y)?), ("C_{Y,X}", b.component(m, y, x)?)]))();
                let rhs = m.tensor_obj(x, y).and_then(|xy| m.identity(&xy));
                compare(m, &mut sym, || names(m, &[x, y]), lhs, rhs)?;
            }
        }
        out.push(sym.finish());
    }
    Ok(out)
}

/// A non-invertible associator is already reported under
/// `structural-isos`; here it only makes the instance fail.
fn soften_inv<T>(r: Result<T>) -> Result<T> {
    match r {
        Err(Error::NotInvertible(f)) => Err(Error::Wiring {
            stage: "a⁻¹".into(),
            detail: format!("{f} has no inverse"),
        }),
        other => other,
    }
}

fn check_duality_types<M: Monoidal>(m: &M, d: &DualityData<M>) -> Result<()> {
    let unit = m.unit();
    let ev_src = m.tensor_obj(&d.dual, &d.object)?;
    if !has_type(m, &d.ev, &ev_src, &unit) {
        return Err(Error::Wiring {
            stage: "ev".into(),
            detail: format!("has type {}, expected {}", typing(m, &d.ev), arrow(m, &ev_src, &unit)),
        });
    }
    let coev_dst = m.tensor_obj(&d.object, &d.dual)?;
    if !has_type(m, &d.coev, &unit, &coev_dst) {
        return Err(Error::Wiring {
            stage: "coev".into(),
            detail: format!("has type {}, expected {}", typing(m, &d.coev), arrow(m, &unit, &coev_dst)),
        });
    }
    Ok(())
}

/// The two zig-zag identities
/// `ρ_X ∘ (Id_X⊗ev) ∘ a_{X,X*,X} ∘ (coev⊗Id_X) ∘ λ⁻¹_X = Id_X` and
/// `λ_{X*} ∘ (ev⊗Id_{X*}) ∘ a⁻¹_{X*,X,X*} ∘ (Id_{X*}⊗coev) ∘ ρ⁻¹_{X*} = Id_{X*}`.
///
/// Mistyped `ev` or `coev` is a wiring error naming the stage.
pub fn check_zigzag<M: Monoidal>(m: &M, d: &DualityData<M>) -> Result<Vec<Report>> {
    check_duality_types(m, d)?;
    let (x, xs) = (&d.object, &d.dual);

    let first = compose_chain(
        m,
        &[
            ("λ⁻¹_X", m.left_unitor_inv(x)?),
            ("coev⊗Id_X", m.tensor_mor(&d.coev, &m.identity(x)?)?),
            ("a_{X,X*,X}", m.associator(x, xs, x)?),
            ("Id_X⊗ev", m.tensor_mor(&m.identity(x)?, &d.ev)?),
            ("ρ_X", m.right_unitor(x)?),
        ],
    )?;
    let second = compose_chain(
        m,
        &[
            ("ρ⁻¹_{X*}", m.right_unitor_inv(xs)?),
            ("Id_{X*}⊗coev", m.tensor_mor(&m.identity(xs)?, &d.coev)?),
            ("a⁻¹_{X*,X,X*}", m.associator_inv(xs, x, xs)?),
            ("ev⊗Id_{X*}", m.tensor_mor(&d.ev, &m.identity(xs)?)?),
            ("λ_{X*}", m.left_unitor(xs)?),
        ],
    )?;

    let mut t1 = Tally::new("zigzag-object");
    compare(m, &mut t1, || names(m, &[x]), Ok(first), m.identity(x))?;
    let mut t2 = Tally::new("zigzag-dual");
    compare(m, &mut t2, || names(m, &[xs]), Ok(second), m.identity(xs))?;
    Ok(vec![t1.finish(), t2.finish()])
}

/// `tr(f) = ev ∘ (Id_{X*}⊗f) ∘ C_{X,X*} ∘ coev`, an endomorphism of the unit.
pub fn trace<M: Monoidal, B: Braiding<M>>(m: &M, b: &B, d: &DualityData<M>, f: &M::Mor) -> Result<M::Mor> {
    if m.source(f) != d.object || m.target(f) != d.object {
        return Err(Error::NotEndomorphism(format!(
            "{} : {} (trace needs an endomorphism of {})",
            m.show_mor(f),
            typing(m, f),
            m.show_obj(&d.object)
        )));
    }
    check_duality_types(m, d)?;
    compose_chain(
        m,
        &[
            ("coev", d.coev.clone()),
            ("C_{X,X*}", b.component(m, &d.object, &d.dual)?),
            ("Id_{X*}⊗f", m.tensor_mor(&m.identity(&d.dual)?, f)?),
            ("ev", d.ev.clone()),
        ],
    )
}
