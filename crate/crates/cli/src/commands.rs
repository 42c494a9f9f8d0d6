use std::path::{Path, PathBuf};

use moncat::category::{
    image_subcategory, Category, validate_functor, CategoryFile, CategoryRef, FinCategory, FunctorData, FunctorFile, Scope,
    DEFAULT_SIZE_CAP,
};
use moncat::cob::{cob_scope, ClassBounds, Cob, CobClassFile, CobSwap};
use moncat::finvect::{self, FinVect, LinMap, LinMapFile, Swap};
use moncat::induced::{
    check_image_conditions, full_scope, induce_tensor_from_base, induce_tensor_on_image, load_category,
    load_monoidal, tabulate_on, transfer_dual, validate_base, verify_lax_monoidal, BaseFile, DualityFile, FinBase,
    FinDuality, FinImage, FinLax, ImageFile, LaxFile, LaxMonoidalFunctor, MonoidalRef,
};
use moncat::linalg::show_q;
use moncat::loopspace::{Lift, LoopCat, LoopFile, LoopSwap};
use moncat::monoidal::{
    check_bifunctoriality, check_hexagon, check_pentagon_triangle, check_zigzag, trace, DualityData,
    FinMonoidal, Monoidal,
};
use moncat::report::Report;
use moncat::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::output::Outcome;
use crate::{Backend, Carrier, Check, Cli, Cob as CobVerb, Command, Induce, Trace, TransferDual, Validate};

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))
}

fn parse_file<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read(path)?).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Resolves paths inside a file relative to that file's directory.
fn resolver(path: &Path) -> impl Fn(&str) -> Result<String> {
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    move |p: &str| read(&dir.join(p))
}

struct Ctx {
    cap: usize,
    dims: Vec<usize>,
    bounds: ClassBounds,
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Ctx {
        cap: cli.caps.scope_cap.map_or(DEFAULT_SIZE_CAP, |c| c as usize),
        dims: (1..=cli.caps.max_dim as usize).collect(),
        bounds: ClassBounds {
            max_circles: cli.caps.max_circles as usize,
            ..ClassBounds::default()
        },
    };
    let name = verb_name(&cli.command);
    match dispatch(&ctx, &cli.command, &name) {
        Err(Error::Refused { reason, reports }) => Ok(Outcome::refused(&name, reason, reports)),
        other => other,
    }
}

fn verb_name(c: &Command) -> String {
    let (a, b) = match c {
        Command::Validate(v) => (
            "validate",
            match v {
                Validate::Category { .. } => "category",
                Validate::Functor { .. } => "functor",
                Validate::Base { .. } => "base",
            },
        ),
        Command::Check(v) => (
            "check",
            match v {
                Check::Coherence(_) => "coherence",
                Check::Hexagon(_) => "hexagon",
                Check::Lax { .. } => "lax",
                Check::Zigzag { .. } => "zigzag",
                Check::Thm31 { .. } => "thm31",
            },
        ),
        Command::Induce(v) => (
            "induce",
            match v {
                Induce::Image { .. } => "image",
                Induce::Base { .. } => "base",
            },
        ),
        Command::Trace(v) => (
            "trace",
            match v {
                Trace::Finvect { .. } => "finvect",
                Trace::Loop { .. } => "loop",
            },
        ),
        Command::Cob(v) => (
            "cob",
            match v {
                CobVerb::Glue { .. } => "glue",
                CobVerb::Tensor { .. } => "tensor",
            },
        ),
        Command::TransferDual(_) => return "transfer-dual".into(),
    };
    format!("{a} {b}")
}

fn dispatch(ctx: &Ctx, command: &Command, name: &str) -> Result<Outcome> {
    match command {
        Command::Validate(Validate::Category { file }) => {
            let c: CategoryFile = parse_file(file)?;
            let cat = FinCategory::from_file_with_cap(&c, ctx.cap)?;
            Ok(Outcome::new(name, cat.validate()))
        }
        Command::Validate(Validate::Functor { file }) => {
            let f: FunctorFile = parse_file(file)?;
            let resolve = resolver(file);
            let data = FunctorData::from_file(&f, |p| load_category(&CategoryRef::Path(p.into()), &resolve, ctx.cap))?;
            Ok(Outcome::new(name, validate_functor(&data)))
        }
        Command::Validate(Validate::Base { file }) => {
            let fb = load_base(ctx, file)?;
            let reports = validate_base(&fb.base(), &fb.scope(), &fb.product_scope())?;
            Ok(Outcome::new(name, reports))
        }
        Command::Check(Check::Coherence(carrier)) => coherence(ctx, carrier, name),
        Command::Check(Check::Hexagon(carrier)) => hexagon(ctx, carrier, name),
        Command::Check(Check::Lax { file, strong }) => {
            let fl = load_lax(ctx, file)?;
            let l = fl.lax()?;
            let verdict = verify_lax_monoidal(&l, &fl.source, &fl.target, &full_scope(fl.source.category()))?;
            let reports = verdict
                .reports
                .into_iter()
                .filter(|r| *strong || !r.law.ends_with("-invertible"))
                .collect();
            #[derive(Serialize)]
            struct Verdict {
                lax: bool,
                normal: bool,
                strong: bool,
            }
            Ok(Outcome::new(name, reports).with_result(Verdict {
                lax: verdict.lax,
                normal: verdict.normal,
                strong: verdict.strong,
            }))
        }
        Command::Check(Check::Zigzag {
            file,
            backend,
            dim,
            modes,
        }) => match (file, backend) {
            (Some(file), _) => {
                let d = load_duality(ctx, file)?;
                Ok(Outcome::new(name, check_zigzag(&d.monoidal, &d.data)?))
            }
            (None, Some(Backend::Finvect)) => Ok(Outcome::new(name, check_zigzag(&FinVect, &FinVect.duality(*dim))?)),
            (None, Some(Backend::Loop)) => {
                let cat = LoopCat::new(*modes);
                Ok(Outcome::new(name, check_zigzag(&cat, &cat.duality(*dim))?))
            }
            (None, Some(Backend::Cob)) => Ok(Outcome::new(name, check_zigzag(&Cob, &Cob.duality(*dim))?)),
            (None, None) => Err(Error::Config("give a duality file or --backend".into())),
        },
        Command::Check(Check::Thm31 { file }) => {
            let img = load_image(ctx, file)?;
            let mut reports = validate_functor(&img.functor);
            reports.extend(check_image_conditions(
                &img.functor,
                &img.source,
                &*img.target,
                &full_scope(img.source.category()),
            )?);
            Ok(Outcome::new(name, reports))
        }
        Command::Induce(Induce::Image { file }) => {
            let img = load_image(ctx, file)?;
            let scope = full_scope(img.source.category());
            let induced = induce_tensor_on_image(&img.functor, &img.source, &*img.target, &scope)?;
            let sub = image_subcategory(&img.functor)?;
            let on_image = Scope::new(
                sub.object_ids().map(|x| img.target.object(sub.obj_name(x))).collect::<Result<_>>()?,
                sub.morphism_ids().map(|f| img.target.morphism(sub.mor_name(f))).collect::<Result<_>>()?,
            );
            let table = tabulate_on(&induced.tensor, &sub, &on_image)?;
            Ok(Outcome::new(name, induced.reports)
                .with_provenance(induced.provenance)
                .with_result(table))
        }
        Command::Induce(Induce::Base { file }) => {
            let fb = load_base(ctx, file)?;
            let base = fb.base();
            let induced = induce_tensor_from_base(&base, &fb.scope(), &fb.product_scope())?;
            let table = tabulate_on(&induced.tensor, &fb.target, &induced.scope)?;
            Ok(Outcome::new(name, induced.reports)
                .with_provenance(induced.provenance)
                .with_result(table))
        }
        Command::Trace(Trace::Finvect { dim, map }) => {
            let f = square_map(map, *dim)?;
            let n = f.src().dim;
            let d = FinVect.duality(n);
            let t = trace(&FinVect, &Swap, &d, &f)?;
            Ok(Outcome::new(name, check_zigzag(&FinVect, &d)?).with_value(show_q(scalar(&t)?)))
        }
        Command::Trace(Trace::Loop { dim, modes, map, probe }) => {
            let f = square_map(map, *dim)?;
            let cat = LoopCat::new(*modes);
            let n = f.src().dim;
            let d = cat.duality(n);
            let lifted = cat.lift(f);
            let t = trace(&cat, &LoopSwap, &d, &lifted)?;
            let out = Outcome::new(name, check_zigzag(&cat, &d)?)
                .with_value(format!("{}·γ", show_q(scalar(t.extract())?)));
            match probe {
                None => Ok(out),
                Some(p) => {
                    let g: LoopFile = parse_file(p)?;
                    let image = cat.loop_trace(&lifted, &g.to_loop()?)?;
                    Ok(out.with_result(LoopFile::from_loop(&image)))
                }
            }
        }
        Command::Cob(verb) => {
            let (first, second) = match verb {
                CobVerb::Glue { first, second } | CobVerb::Tensor { first, second } => (first, second),
            };
            let a = parse_file::<CobClassFile>(first)?.to_class()?;
            let b = parse_file::<CobClassFile>(second)?.to_class()?;
            let c = match verb {
                CobVerb::Glue { .. } => a.glue(&b)?,
                CobVerb::Tensor { .. } => a.disjoint_union(&b),
            };
            Ok(Outcome::new(name, Vec::new())
                .with_value(c.to_string())
                .with_result(CobClassFile::from_class(&c)))
        }
        Command::TransferDual(t) => transfer(ctx, t, name),
    }
}

fn scalar(t: &LinMap) -> Result<&moncat::linalg::Q> {
    t.as_scalar().ok_or_else(|| Error::Shape("trace is not a scalar".into()))
}

fn square_map(map: &str, dim: Option<usize>) -> Result<LinMap> {
    let f = if map == "identity" {
        LinMap::identity(dim.ok_or_else(|| Error::Config("--map identity needs --dim".into()))?)
    } else {
        parse_file::<LinMapFile>(Path::new(map))?.to_map()?
    };
    if f.src() != f.dst() {
        return Err(Error::NotEndomorphism(FinVect.show_mor(&f)));
    }
    if let Some(n) = dim {
        if f.src().dim != n {
            return Err(Error::Shape(format!("map acts on R^{}, --dim is {n}", f.src().dim)));
        }
    }
    Ok(f)
}

fn load_monoidal_file(ctx: &Ctx, file: &Path) -> Result<FinMonoidal> {
    let m = parse_file(file)?;
    load_monoidal(&MonoidalRef::Inline(Box::new(m)), &resolver(file), ctx.cap)
}

fn load_image(ctx: &Ctx, file: &Path) -> Result<FinImage> {
    let f: ImageFile = parse_file(file)?;
    FinImage::from_file(&f, &resolver(file), ctx.cap)
}

fn load_lax(ctx: &Ctx, file: &Path) -> Result<FinLax> {
    let f: LaxFile = parse_file(file)?;
    FinLax::from_file(&f, &resolver(file), ctx.cap)
}

fn load_duality(ctx: &Ctx, file: &Path) -> Result<FinDuality> {
    let f: DualityFile = parse_file(file)?;
    FinDuality::from_file(&f, &resolver(file), ctx.cap)
}

fn load_base(ctx: &Ctx, file: &Path) -> Result<FinBase> {
    let f: BaseFile = parse_file(file)?;
    FinBase::from_file(&f, &resolver(file), ctx.cap)
}

fn laws<M: Monoidal>(m: &M, scope: &Scope<M>) -> Result<Vec<Report>> {
    let mut reports = check_bifunctoriality(m, scope)?;
    reports.extend(check_pentagon_triangle(m, scope)?);
    Ok(reports)
}

fn carrier_file(carrier: &Carrier) -> Result<&PathBuf> {
    carrier
        .file
        .as_ref()
        .ok_or_else(|| Error::Config("give a monoidal file or --backend".into()))
}

fn coherence(ctx: &Ctx, carrier: &Carrier, name: &str) -> Result<Outcome> {
    let reports = match carrier.backend {
        Some(Backend::Finvect) => laws(&FinVect, &finvect::scope(&ctx.dims))?,
        Some(Backend::Loop) => {
            let cat = LoopCat::new(carrier.modes);
            laws(&cat, &cat.scope(&ctx.dims))?
        }
        Some(Backend::Cob) => laws(&Cob, &cob_scope(ctx.bounds, ctx.cap)?)?,
        None => {
            let m = load_monoidal_file(ctx, carrier_file(carrier)?)?;
            let mut reports = m.category().validate();
            reports.extend(laws(&m, &full_scope(m.category()))?);
            reports
        }
    };
    Ok(Outcome::new(name, reports))
}

fn hexagon(ctx: &Ctx, carrier: &Carrier, name: &str) -> Result<Outcome> {
    let reports = match carrier.backend {
        Some(Backend::Finvect) => check_hexagon(&FinVect, &Swap, &finvect::scope(&ctx.dims))?,
        Some(Backend::Loop) => {
            let cat = LoopCat::new(carrier.modes);
            check_hexagon(&cat, &LoopSwap, &cat.scope(&ctx.dims))?
        }
        Some(Backend::Cob) => check_hexagon(&Cob, &CobSwap, &cob_scope(ctx.bounds, ctx.cap)?)?,
        None => {
            let m = load_monoidal_file(ctx, carrier_file(carrier)?)?;
            let b = m
                .braiding()
                .ok_or_else(|| Error::Config("the monoidal file has no braiding".into()))?;
            check_hexagon(&m, &b, &full_scope(m.category()))?
        }
    };
    Ok(Outcome::new(name, reports))
}

#[derive(Serialize)]
struct DualityOut {
    object: String,
    dual: String,
    ev: String,
    coev: String,
}

impl DualityOut {
    fn new<M: Monoidal>(m: &M, d: &DualityData<M>) -> Self {
        DualityOut {
            object: m.show_obj(&d.object),
            dual: m.show_obj(&d.dual),
            ev: m.show_mor(&d.ev),
            coev: m.show_mor(&d.coev),
        }
    }
}

fn transfer(ctx: &Ctx, t: &TransferDual, name: &str) -> Result<Outcome> {
    match (&t.lax, &t.duality, t.backend) {
        (Some(lax), Some(duality), _) => {
            let fl = load_lax(ctx, lax)?;
            let fd = load_duality(ctx, duality)?;
            // Carry the duality file's names over to the lax functor's source.
            let (src, names) = (fl.source.category(), fd.monoidal.category());
            let data = DualityData::new(
                src.object(names.obj_name(fd.data.object))?,
                src.object(names.obj_name(fd.data.dual))?,
                src.morphism(names.mor_name(fd.data.ev))?,
                src.morphism(names.mor_name(fd.data.coev))?,
            );
            let l = fl.lax()?;
            let out = transfer_dual(&l, &fl.source, &fl.target, &data)?;
            Ok(Outcome::new(name, check_zigzag(&fl.target, &out)?).with_result(DualityOut::new(&fl.target, &out)))
        }
        (None, _, Some(Backend::Loop)) => {
            let cat = LoopCat::new(t.modes);
            let l = LaxMonoidalFunctor::with_identity_comparisons(Lift { modes: t.modes }, &FinVect, &cat)?;
            let out = transfer_dual(&l, &FinVect, &cat, &FinVect.duality(t.dim))?;
            Ok(Outcome::new(name, check_zigzag(&cat, &out)?).with_result(DualityOut::new(&cat, &out)))
        }
        (None, _, Some(b)) => Err(Error::Config(format!(
            "transfer-dual has no built-in functor for the {b:?} backend; use --backend loop or give files"
        ))),
        _ => Err(Error::Config("give a lax file and a duality file, or --backend loop".into())),
    }
}
