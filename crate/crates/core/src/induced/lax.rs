use crate::category::{compose_chain, has_type, Category, Functor, Scope};
use crate::error::{Error, Result};
use crate::monoidal::{check_zigzag, compare, invert, DualityData, Monoidal};
use crate::report::{all_passed, Failure, Report, Tally};

type Comparison<'a, C, D> = Box<dyn Fn(&<C as Category>::Obj, &<C as Category>::Obj) -> Result<<D as Category>::Mor> + 'a>;

/// A functor between monoidal carriers with comparison maps
/// `c_{M,N}: F(M)⊗F(N) → F(M⊗N)` and `i: I_D → F(I_C)`.
pub struct LaxMonoidalFunctor<'a, C: Category, D: Category, F> {
    pub functor: F,
    pub comparison: Comparison<'a, C, D>,
    pub unit_map: D::Mor,
}

impl<'a, C, D, F> LaxMonoidalFunctor<'a, C, D, F>
where
    C: Monoidal,
    D: Monoidal,
    F: Functor<C, D> + 'a,
{
    pub fn new(
        functor: F,
        comparison: impl Fn(&C::Obj, &C::Obj) -> Result<D::Mor> + 'a,
        unit_map: D::Mor,
    ) -> Self {
        LaxMonoidalFunctor {
            functor,
            comparison: Box::new(comparison),
            unit_map,
        }
    }

    /// Comparison maps are identities `F(M)⊗F(N) = F(M⊗N)`. Whether that
    /// typing holds is left to [`verify_lax_monoidal`].
    pub fn with_identity_comparisons(functor: F, mc: &'a C, md: &'a D) -> Result<Self>
    where
        F: Clone,
    {
        let unit_map = md.identity(&functor.map_obj(&mc.unit())?)?;
        let inner = functor.clone();
        Ok(Self::new(
            functor,
            move |m, n| {
                let fm = inner.map_obj(m)?;
                let fn_ = inner.map_obj(n)?;
                md.identity(&md.tensor_obj(&fm, &fn_)?)
            },
            unit_map,
        ))
    }

    pub fn comparison(&self, m: &C::Obj, n: &C::Obj) -> Result<D::Mor> {
        (self.comparison)(m, n)
    }
}

#[derive(Clone, Debug)]
pub struct LaxVerdict {
    pub reports: Vec<Report>,
    /// Naturality, associativity and unit laws all pass.
    pub lax: bool,
    /// Lax, and `i` is invertible.
    pub normal: bool,
    /// Normal, and every comparison in scope is invertible.
    pub strong: bool,
}

/// Checks comparison typing and naturality, the associativity and unit
/// compatibilities, and invertibility of `i` and of every `c_{M,N}` in
/// scope. The normal and strong verdicts are derived from the reports.
pub fn verify_lax_monoidal<C, D, F>(
    l: &LaxMonoidalFunctor<'_, C, D, F>,
    mc: &C,
    md: &D,
    scope: &Scope<C>,
) -> Result<LaxVerdict>
where
    C: Monoidal,
    D: Monoidal,
    F: Functor<C, D>,
{
    scope.ensure_known(mc)?;
    let f = &l.functor;
    let c = |m: &C::Obj, n: &C::Obj| l.comparison(m, n);
    let objs = &scope.objects;

    let mut ty = Tally::new("comparison-typing");
    let fi = f.map_obj(&mc.unit())?;
    ty.check(has_type(md, &l.unit_map, &md.unit(), &fi), || {
        Failure::new(
            vec!["i".into()],
            format!("{} -> {}", md.show_obj(&md.source(&l.unit_map)), md.show_obj(&md.target(&l.unit_map))),
            format!("{} -> {}", md.show_obj(&md.unit()), md.show_obj(&fi)),
        )
    });
    for m in objs {
        for n in objs {
            let cmn = c(m, n)?;
            let src = md.tensor_obj(&f.map_obj(m)?, &f.map_obj(n)?)?;
            let dst = f.map_obj(&mc.tensor_obj(m, n)?)?;
            ty.check(has_type(md, &cmn, &src, &dst), || {
                Failure::new(
                    vec![mc.show_obj(m), mc.show_obj(n)],
                    format!("{} -> {}", md.show_obj(&md.source(&cmn)), md.show_obj(&md.target(&cmn))),
                    format!("{} -> {}", md.show_obj(&src), md.show_obj(&dst)),
                )
            });
        }
    }

    let mut nat = Tally::new("comparison-naturality");
    for g in &scope.morphisms {
        for h in &scope.morphisms {
            let lhs = (|| {
                compose_chain(
                    md,
                    &[
                        ("c_{M,N}", c(&mc.source(g), &mc.source(h))?),
                        ("F(f⊗g)", f.map_mor(&mc.tensor_mor(g, h)?)?),
                    ],
                )
            })();
            let rhs = (|| {
                compose_chain(
                    md,
                    &[
                        ("Ff⊗Fg", md.tensor_mor(&f.map_mor(g)?, &f.map_mor(h)?)?),
                        ("c_{M',N'}", c(&mc.target(g), &mc.target(h))?),
                    ],
                )
            })();
            compare(md, &mut nat, || vec![mc.show_mor(g), mc.show_mor(h)], lhs, rhs)?;
        }
    }

    let mut assoc = Tally::new("comparison-associativity");
    for x in objs {
        for y in objs {
            for z in objs {
                let (fx, fy, fz) = (f.map_obj(x)?, f.map_obj(y)?, f.map_obj(z)?);
                let lhs = (|| {
                    let xy = mc.tensor_obj(x, y)?;
                    compose_chain(
                        md,
                        &[
                            ("c_{X,Y}⊗Id", md.tensor_mor(&c(x, y)?, &md.identity(&fz)?)?),
                            ("c_{X⊗Y,Z}", c(&xy, z)?),
                            ("F(a)", f.map_mor(&mc.associator(x, y, z)?)?),
                        ],
                    )
                })();
                let rhs = (|| {
                    let yz = mc.tensor_obj(y, z)?;
                    compose_chain(
                        md,
                        &[
                            ("a", md.associator(&fx, &fy, &fz)?),
                            ("Id⊗c_{Y,Z}", md.tensor_mor(&md.identity(&fx)?, &c(y, z)?)?),
                            ("c_{X,Y⊗Z}", c(x, &yz)?),
                        ],
                    )
                })();
                compare(md, &mut assoc, || vec![mc.show_obj(x), mc.show_obj(y), mc.show_obj(z)], lhs, rhs)?;
            }
        }
    }

    let unit = mc.unit();
    let mut left = Tally::new("left-unit");
    let mut right = Tally::new("right-unit");
    for m in objs {
        let fm = f.map_obj(m)?;
        let lhs = (|| {
            compose_chain(
                md,
                &[
                    ("i⊗Id", md.tensor_mor(&l.unit_map, &md.identity(&fm)?)?),
                    ("c_{I,M}", c(&unit, m)?),
                    ("F(λ)", f.map_mor(&mc.left_unitor(m)?)?),
                ],
            )
        })();
        compare(md, &mut left, || vec![mc.show_obj(m)], lhs, md.left_unitor(&fm))?;
        let lhs = (|| {
            compose_chain(
                md,
                &[
                    ("Id⊗i", md.tensor_mor(&md.identity(&fm)?, &l.unit_map)?),
                    ("c_{M,I}", c(m, &unit)?),
                    ("F(ρ)", f.map_mor(&mc.right_unitor(m)?)?),
                ],
            )
        })();
        compare(md, &mut right, || vec![mc.show_obj(m)], lhs, md.right_unitor(&fm))?;
    }

    let mut unit_inv = Tally::new("unit-invertible");
    unit_inv.check(md.inverse(&l.unit_map).is_some(), || {
        Failure::new(vec!["i".into()], md.show_mor(&l.unit_map), "invertible")
    });
    let mut comp_inv = Tally::new("comparison-invertible");
    for m in objs {
        for n in objs {
            let cmn = c(m, n)?;
            comp_inv.check(md.inverse(&cmn).is_some(), || {
                Failure::new(vec![mc.show_obj(m), mc.show_obj(n)], md.show_mor(&cmn), "invertible")
            });
        }
    }

    let lax_reports = [ty.finish(), nat.finish(), assoc.finish(), left.finish(), right.finish()];
    let lax = all_passed(&lax_reports);
    let (ui, ci) = (unit_inv.finish(), comp_inv.finish());
    let normal = lax && ui.passed();
    let strong = normal && ci.passed();
    let mut reports = lax_reports.to_vec();
    reports.push(ui);
    reports.push(ci);
    Ok(LaxVerdict {
        reports,
        lax,
        normal,
        strong,
    })
}

/// Transports duality data along a lax monoidal functor:
/// `ev' = i⁻¹ ∘ F(ev) ∘ c_{M*,M}` and `coev' = c_{M,M*}⁻¹ ∘ F(coev) ∘ i`.
///
/// Refuses when `i` or `c_{M,M*}` is not invertible, when the input fails
/// its zig-zags, or when the output does.
pub fn transfer_dual<C, D, F>(
    l: &LaxMonoidalFunctor<'_, C, D, F>,
    mc: &C,
    md: &D,
    dm: &DualityData<C>,
) -> Result<DualityData<D>>
where
    C: Monoidal,
    D: Monoidal,
    F: Functor<C, D>,
{
    let input = check_zigzag(mc, dm)?;
    if !all_passed(&input) {
        return Err(Error::Refused {
            reason: format!("duality data for {} fails its zig-zag identities", mc.show_obj(&dm.object)),
            reports: input,
        });
    }
    let refuse = |what: String| Error::Refused {
        reason: format!("{what} is not invertible; dual cannot be transferred"),
        reports: Vec::new(),
    };
    let i_inv = invert(md, &l.unit_map).map_err(|_| refuse("unit comparison i".into()))?;
    let c_m_ms = l.comparison(&dm.object, &dm.dual)?;
    let c_inv = invert(md, &c_m_ms).map_err(|_| {
        refuse(format!(
            "comparison c at ({}, {})",
            mc.show_obj(&dm.object),
            mc.show_obj(&dm.dual)
        ))
    })?;
    let f = &l.functor;
    let ev = compose_chain(
        md,
        &[
            ("c_{M*,M}", l.comparison(&dm.dual, &dm.object)?),
            ("F(ev)", f.map_mor(&dm.ev)?),
            ("i⁻¹", i_inv),
        ],
    )?;
    let coev = compose_chain(
        md,
        &[
            ("i", l.unit_map.clone()),
            ("F(coev)", f.map_mor(&dm.coev)?),
            ("c_{M,M*}⁻¹", c_inv),
        ],
    )?;
    let out = DualityData::new(f.map_obj(&dm.object)?, f.map_obj(&dm.dual)?, ev, coev);
    let reports = check_zigzag(md, &out)?;
    if !all_passed(&reports) {
        return Err(Error::Refused {
            reason: "transferred duality data fails its zig-zag identities".into(),
            reports,
        });
    }
    Ok(out)
}
