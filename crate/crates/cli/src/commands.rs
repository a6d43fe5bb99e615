//! The `check`, `construct` and `fixtures` commands. Each returns an [`Outcome`]
//! and leaves printing and file output to the caller.

use std::path::Path;

use nova_core::algebra::{
    adjoint_rep, check_bilinear_form, check_declared, check_representation, check_structure_map,
    coadjoint_rep, Algebra, AlgebraKind,
};
use nova_core::bialgebra::{
    check_bialgebra, check_coalgebra, BialgebraFlavor, CoalgebraKind, DiffMaps,
};
use nova_core::constructions::{
    check_descendent_iso, check_lift, check_manin_triple, check_quadratic_rb, delta_omega,
    differential_double, factorize_element, induce_lie_bialgebra, induce_novikov_bialgebra,
    lie_coproduct, novikov_double, product_labels, r_from_quadratic_rb, rb_from_factorizable,
    DiffBundle, QuadraticRB,
};
use nova_core::fixtures;
use nova_core::kernel::Scalar;
use nova_core::report::{fmt_tensor2, fmt_tensor3, fmt_vector, Check, Report};
use nova_core::yangbaxter::{
    check_admissible_aybe, classify_differential, classify_lie, classify_r, coboundary_coproduct,
    grid_search_r, parametric_residual, ybe_residual, Classification, CoboundaryFlavor, RMatrix,
    Verdict, YbeFlavor,
};

use crate::{fixture_file, CliError, DefinitionFile, Inputs, Outcome};

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub q: Option<Scalar>,
    pub weight: Option<Scalar>,
    pub grid: Option<Vec<Scalar>>,
    pub support: Option<String>,
}

pub const SUBCOMMANDS: [&str; 13] = [
    "cobound",
    "double",
    "diff-double",
    "factorize",
    "rb-from-r",
    "r-from-rb",
    "induce-novikov",
    "induce-lie",
    "lift-rhat",
    "delta-omega",
    "classify",
    "search",
    "parametric",
];

pub const CHECK_FLAVORS: [&str; 11] = [
    "auto",
    "identities",
    "coalgebra",
    "novikov-bialgebra",
    "infinitesimal-bialgebra",
    "diff-infinitesimal-bialgebra",
    "lie-bialgebra",
    "representation",
    "form",
    "maps",
    "admissible-aybe",
];

pub fn parse_rational(s: &str) -> Result<Scalar, CliError> {
    Scalar::parse(s.trim()).map_err(|e| CliError::Input(format!("{s:?}: {e}")))
}

/// Comma-separated rationals.
pub fn parse_grid(s: &str) -> Result<Vec<Scalar>, CliError> {
    s.split(',').map(parse_rational).collect()
}

/// Semicolon-separated pairs `i,j`, each side a 1-based index or a basis label.
pub fn parse_support(s: &str, basis: &[String]) -> Result<Vec<(usize, usize)>, CliError> {
    let side = |t: &str| -> Result<usize, CliError> {
        let t = t.trim();
        if let Some(k) = basis.iter().position(|b| b == t) {
            return Ok(k);
        }
        match t.parse::<usize>() {
            Ok(k) if (1..=basis.len()).contains(&k) => Ok(k - 1),
            _ => Err(CliError::Input(format!(
                "support: {t:?} is neither a label nor an index in 1..={}",
                basis.len()
            ))),
        }
    };
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| match p.split(',').collect::<Vec<_>>().as_slice() {
            [i, j] => Ok((side(i)?, side(j)?)),
            _ => Err(CliError::Input(format!(
                "support: expected `i,j`, found {p:?}"
            ))),
        })
        .collect()
}

fn bialgebra_flavor(inputs: &Inputs, a: &Algebra) -> Option<BialgebraFlavor> {
    match a.kind() {
        AlgebraKind::LeftNovikov => Some(BialgebraFlavor::Novikov),
        AlgebraKind::Lie => Some(BialgebraFlavor::Lie),
        AlgebraKind::CommAssoc if inputs.partial.is_some() && inputs.theta.is_some() => {
            Some(BialgebraFlavor::DiffInfinitesimal)
        }
        AlgebraKind::CommAssoc => Some(BialgebraFlavor::Infinitesimal),
        _ => None,
    }
}

fn bialgebra_report(inputs: &Inputs, flavor: BialgebraFlavor) -> Result<Report, CliError> {
    let a = inputs.algebra()?;
    let d = inputs.coproduct()?;
    let maps = match flavor {
        BialgebraFlavor::DiffInfinitesimal => Some(DiffMaps {
            partial: inputs.partial()?,
            theta: inputs.theta()?,
        }),
        _ => None,
    };
    Ok(check_bialgebra(a, d, flavor, maps)?.prefixed(&format!("{flavor} bialgebra")))
}

fn maps_report(inputs: &Inputs) -> Result<Report, CliError> {
    let a = inputs.algebra()?;
    let mut report = Report::new();
    if let Some(p) = &inputs.partial {
        report.extend(check_structure_map(a, p, None)?.prefixed("∂"));
    }
    if let Some(t) = &inputs.theta {
        report.extend(check_structure_map(a, t, inputs.partial.as_ref())?.prefixed("θ"));
    }
    if let Some(p) = &inputs.rota_baxter {
        report.extend(check_structure_map(a, p, None)?.prefixed("P"));
    }
    for (name, m) in &inputs.maps {
        report.extend(check_structure_map(a, m, None)?.prefixed(name));
    }
    Ok(report)
}

fn form_report(inputs: &Inputs) -> Result<Report, CliError> {
    Ok(check_bilinear_form(inputs.algebra()?, inputs.form()?)?.to_report())
}

/// Runs the checker selected by `flavor`, or everything the inputs support when it is `auto`.
pub fn check(inputs: &Inputs, flavor: &str) -> Result<Outcome, CliError> {
    let mut out = Outcome::new(format!("check --flavor {flavor}"));
    let report = &mut out.report;
    match flavor {
        "auto" => {
            let flavor = inputs
                .algebra
                .as_ref()
                .and_then(|a| bialgebra_flavor(inputs, a));
            match (&inputs.algebra, &inputs.coproduct, flavor) {
                (Some(_), Some(_), Some(f)) => report.extend(bialgebra_report(inputs, f)?),
                _ => {
                    if let Some(a) = &inputs.algebra {
                        report.extend(check_declared(a));
                    }
                    if let Some(d) = &inputs.coproduct {
                        report.extend(check_coalgebra(inputs.basis()?, d, d.kind()));
                    }
                }
            }
            if inputs.algebra.is_some() {
                report.extend(maps_report(inputs)?);
                if inputs.form.is_some() {
                    report.extend(form_report(inputs)?);
                }
            }
            if report.checks.is_empty() {
                return Err(CliError::Input(
                    "nothing to check in the given inputs".into(),
                ));
            }
        }
        "identities" => report.extend(check_declared(inputs.algebra()?)),
        "coalgebra" => {
            let d = inputs.coproduct()?;
            report.extend(check_coalgebra(inputs.basis()?, d, d.kind()));
        }
        "novikov-bialgebra" => report.extend(bialgebra_report(inputs, BialgebraFlavor::Novikov)?),
        "infinitesimal-bialgebra" => {
            report.extend(bialgebra_report(inputs, BialgebraFlavor::Infinitesimal)?)
        }
        "diff-infinitesimal-bialgebra" => report.extend(bialgebra_report(
            inputs,
            BialgebraFlavor::DiffInfinitesimal,
        )?),
        "lie-bialgebra" => report.extend(bialgebra_report(inputs, BialgebraFlavor::Lie)?),
        "representation" => {
            let a = inputs.algebra()?;
            report.extend(check_representation(a, &adjoint_rep(a)).prefixed("adjoint"));
            report.extend(check_representation(a, &coadjoint_rep(a)).prefixed("coadjoint"));
        }
        "form" => report.extend(form_report(inputs)?),
        "maps" => report.extend(maps_report(inputs)?),
        "admissible-aybe" => report.extend(check_admissible_aybe(
            inputs.algebra()?,
            inputs.partial()?,
            inputs.theta()?,
            inputs.r()?,
        )?),
        other => {
            return Err(CliError::Input(format!(
                "unknown flavor {other:?}; expected one of {}",
                CHECK_FLAVORS.join(", ")
            )))
        }
    }
    Ok(out)
}

fn diff_bundle(inputs: &Inputs) -> Result<DiffBundle, CliError> {
    Ok(DiffBundle {
        algebra: inputs.algebra()?.clone(),
        coproduct: inputs.coproduct()?.clone(),
        partial: inputs.partial()?.clone(),
        theta: inputs.theta()?.clone(),
    })
}

fn classification_lines(c: &Classification) -> Vec<String> {
    let mut lines: Vec<String> = c
        .flags()
        .into_iter()
        .map(|(name, v)| format!("{name}: {v}"))
        .collect();
    if let Some(w) = &c.residual_witness {
        lines.push(format!("residual: {w}"));
    }
    lines
}

fn classify(inputs: &Inputs, out: &mut Outcome) -> Result<(), CliError> {
    let a = inputs.algebra()?;
    let r = inputs.r()?;
    let verdict = match a.kind() {
        AlgebraKind::LeftNovikov => {
            let c = classify_r(a, r)?;
            out.lines.extend(classification_lines(&c));
            out.report.extend(c.to_report());
            c.verdict
        }
        AlgebraKind::Lie => {
            let c = classify_lie(a, r)?;
            out.lines.extend(classification_lines(&c));
            out.report.extend(c.to_report());
            c.verdict
        }
        AlgebraKind::CommAssoc => {
            let c = classify_differential(a, inputs.partial()?, inputs.theta()?, r)?;
            out.lines.extend(classification_lines(&c.base));
            out.lines.push(format!("side conditions: {}", c.admissible));
            out.lines.push(format!("I θᵀ = ∂ I: {}", c.iso_intertwines));
            out.report.extend(c.base.to_report());
            c.verdict
        }
        other => {
            return Err(CliError::Input(format!(
                "cannot classify r-matrices on a {other} algebra"
            )));
        }
    };
    out.verdict = Some(verdict.to_string());
    Ok(())
}

/// Runs one `construct` subcommand. `right` holds the second operand of the tensor-product constructions.
pub fn construct(
    sub: &str,
    inputs: &Inputs,
    right: Option<&Inputs>,
    opts: &Options,
) -> Result<Outcome, CliError> {
    let mut out = Outcome::new(format!("construct {sub}"));
    match sub {
        "cobound" => {
            let a = inputs.algebra()?;
            let flavor = CoboundaryFlavor::for_kind(a.kind()).ok_or_else(|| {
                CliError::Input(format!("no coboundary formula for a {} algebra", a.kind()))
            })?;
            let d = coboundary_coproduct(a, inputs.r()?, flavor)?;
            let mut with = inputs.clone();
            with.coproduct = Some(d.clone());
            let bf = bialgebra_flavor(&with, a).expect("coboundary kinds have a bialgebra flavor");
            out.report.extend(bialgebra_report(&with, bf)?);
            out.objects
                .push(DefinitionFile::from_coproduct("coboundary", a.basis(), &d));
        }
        "double" => {
            let d = novikov_double(inputs.algebra()?, inputs.coproduct()?)?;
            out.report.extend(check_manin_triple(&d)?);
            let c = classify_r(&d.algebra, &d.r)?;
            out.report.push(Check::flag(
                "r̃ is factorizable",
                c.verdict == Verdict::Factorizable,
            ));
            let delta = coboundary_coproduct(&d.algebra, &d.r, CoboundaryFlavor::Novikov)?;
            out.report.extend(
                check_bialgebra(&d.algebra, &delta, BialgebraFlavor::Novikov, None)?
                    .prefixed("double bialgebra"),
            );
            let l = d.algebra.basis();
            out.objects
                .push(DefinitionFile::from_algebra("double", &d.algebra));
            out.objects.push(DefinitionFile::from_rmatrix("r", l, &d.r));
            out.objects
                .push(DefinitionFile::from_coproduct("coboundary", l, &delta));
            out.objects
                .push(DefinitionFile::from_form("pairing", l, &d.form));
        }
        "diff-double" => {
            let d = differential_double(&diff_bundle(inputs)?)?;
            out.report.extend(d.bundle.check()?.prefixed("double"));
            let c =
                classify_differential(&d.bundle.algebra, &d.bundle.partial, &d.bundle.theta, &d.r)?;
            out.report.push(Check::flag(
                "r̃ is factorizable",
                c.verdict == Verdict::Factorizable,
            ));
            let l = d.bundle.algebra.basis();
            out.objects
                .push(DefinitionFile::from_algebra("double", &d.bundle.algebra));
            out.objects.push(DefinitionFile::from_coproduct(
                "coproduct",
                l,
                &d.bundle.coproduct,
            ));
            out.objects
                .push(DefinitionFile::from_map("partial", l, &d.bundle.partial));
            out.objects
                .push(DefinitionFile::from_map("theta", l, &d.bundle.theta));
            out.objects.push(DefinitionFile::from_rmatrix("r", l, &d.r));
        }
        "factorize" => {
            let a = inputs.algebra()?;
            let r = inputs.r()?;
            let l = a.basis();
            for i in 0..a.dim() {
                let x = a.unit(i);
                let (plus, minus) = factorize_element(a, r, &x)?;
                let sum: Vec<Scalar> = plus.iter().zip(&minus).map(|(p, m)| p + m).collect();
                out.lines.push(format!(
                    "{} = ({}) + ({})",
                    l[i],
                    fmt_vector(l, &plus),
                    fmt_vector(l, &minus)
                ));
                out.report
                    .push(Check::flag(format!("x₊ + x₋ = {}", l[i]), sum == x));
            }
            out.verdict = Some(Verdict::Factorizable.to_string());
        }
        "rb-from-r" => {
            let a = inputs.algebra()?;
            let r = inputs.r()?;
            let weight = opts
                .weight
                .clone()
                .or_else(|| inputs.weight.clone())
                .unwrap_or_else(Scalar::one);
            let q = rb_from_factorizable(a, r, &weight)?;
            out.report.extend(check_quadratic_rb(&q)?);
            out.report.extend(check_descendent_iso(a, r, &q)?);
            let back = r_from_quadratic_rb(&q)?;
            out.report
                .push(Check::flag("r recovered from (P, 𝔅)", &back == r));
            out.objects
                .push(DefinitionFile::from_map("P", a.basis(), &q.p));
            out.objects
                .push(DefinitionFile::from_form("form", a.basis(), &q.form));
        }
        "r-from-rb" => {
            let a = inputs.algebra()?;
            let p = inputs
                .rota_baxter
                .clone()
                .ok_or_else(|| CliError::Input("missing input: rota-baxter map".into()))?;
            let mut form = inputs.form()?.clone();
            form.flavor = nova_core::algebra::FormFlavor::NovikovInvariant;
            let q = QuadraticRB {
                algebra: a.clone(),
                p,
                form,
            };
            let rb = check_quadratic_rb(&q)?;
            let r = r_from_quadratic_rb(&q)?;
            out.report.extend(rb);
            let c = classify_r(a, &r)?;
            out.report.push(Check::flag(
                "r is factorizable",
                c.verdict == Verdict::Factorizable,
            ));
            out.verdict = Some(c.verdict.to_string());
            out.objects
                .push(DefinitionFile::from_rmatrix("r", a.basis(), &r));
        }
        "induce-novikov" => {
            let q = opts
                .q
                .clone()
                .or_else(|| inputs.q.clone())
                .unwrap_or_else(|| Scalar::ratio(-1, 2));
            let ind = induce_novikov_bialgebra(&diff_bundle(inputs)?, &q)?;
            out.lines.push(format!("q = {q}"));
            out.report.extend(ind.report);
            let l = ind.algebra.basis();
            out.objects
                .push(DefinitionFile::from_algebra("induced", &ind.algebra));
            out.objects.push(DefinitionFile::from_coproduct(
                "induced-coproduct",
                l,
                &ind.coproduct,
            ));
        }
        "induce-lie" => {
            let right = right.ok_or_else(|| CliError::Input("induce-lie needs --right".into()))?;
            let b = induce_lie_bialgebra(
                inputs.algebra()?,
                inputs.coproduct()?,
                right.algebra()?,
                right.form()?,
            )?;
            out.report.extend(b.report.prefixed("lie bialgebra"));
            let l = b.algebra.basis();
            out.objects
                .push(DefinitionFile::from_algebra("lie", &b.algebra));
            out.objects.push(DefinitionFile::from_coproduct(
                "lie-coproduct",
                l,
                &b.coproduct,
            ));
        }
        "lift-rhat" => {
            let right = right.ok_or_else(|| CliError::Input("lift-rhat needs --right".into()))?;
            let (a, r) = (inputs.algebra()?, inputs.r()?);
            let lift = check_lift(a, r, right.algebra()?, right.form()?)?;
            out.lines.push(format!("τ(r̂) = r̂: {}", lift.tau_symmetric));
            out.lines.push(format!("r̂ skew: {}", lift.skew));
            out.report.extend(lift.to_report());
            if let Some(delta) = &inputs.coproduct {
                let induced = lie_coproduct(delta, &delta_omega(right.algebra()?, right.form()?)?);
                out.report.push(Check::flag(
                    "Δ̃_r̂ equals the induced Δ̃",
                    lift.coboundary == induced,
                ));
            }
            out.verdict = Some(lift.base.verdict.to_string());
            let l = product_labels(a.basis(), right.algebra()?.basis());
            out.objects
                .push(DefinitionFile::from_rmatrix("r-hat", &l, &lift.r_hat));
            out.objects.push(DefinitionFile::from_coproduct(
                "coboundary",
                &l,
                &lift.coboundary,
            ));
        }
        "delta-omega" => {
            let b = inputs.algebra()?;
            let d = delta_omega(b, inputs.form()?)?;
            out.report
                .extend(check_coalgebra(b.basis(), &d, CoalgebraKind::RightNovikov));
            out.objects
                .push(DefinitionFile::from_coproduct("delta-omega", b.basis(), &d));
        }
        "classify" => classify(inputs, &mut out)?,
        "search" => {
            let a = inputs.algebra()?;
            let flavor = YbeFlavor::for_kind(a.kind()).ok_or_else(|| {
                CliError::Input(format!(
                    "no Yang-Baxter equation for a {} algebra",
                    a.kind()
                ))
            })?;
            let grid = match &opts.grid {
                Some(g) => g.clone(),
                None => parse_grid("-1,0,1")?,
            };
            let spec = opts
                .support
                .as_deref()
                .ok_or_else(|| CliError::Input("search needs --support".into()))?;
            let support = parse_support(spec, a.basis())?;
            let hits = grid_search_r(a, &support, &grid, flavor)?;
            let l = a.basis();
            for (k, r) in hits.iter().enumerate() {
                let s = fmt_tensor2(l, r.tensor());
                out.lines.push(format!(
                    "hit {}: {}",
                    k + 1,
                    if s.is_empty() { "0".into() } else { s }
                ));
                out.objects.push(DefinitionFile::from_rmatrix(
                    &format!("hit-{}", k + 1),
                    l,
                    r,
                ));
            }
            out.lines.push(format!("{} hits", hits.len()));
            let all = hits
                .iter()
                .all(|r: &RMatrix| ybe_residual(a, r.tensor(), flavor).is_zero());
            out.report
                .push(Check::flag(format!("every hit solves {flavor}"), all));
        }
        "parametric" => {
            let a = inputs.algebra()?;
            let flavor = YbeFlavor::for_kind(a.kind()).ok_or_else(|| {
                CliError::Input(format!(
                    "no Yang-Baxter equation for a {} algebra",
                    a.kind()
                ))
            })?;
            let r = inputs
                .r_poly
                .as_ref()
                .ok_or_else(|| CliError::Input("missing input: rmatrix".into()))?;
            let res = parametric_residual(a, r, flavor)?;
            let witness = (!res.is_zero()).then(|| nova_core::report::Witness {
                at: vec![],
                discrepancy: fmt_tensor3(a.basis(), &res),
            });
            out.report.push(Check::from_witness(
                format!("{flavor} residual vanishes identically"),
                witness,
            ));
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown construction {other:?}; expected one of {}",
                SUBCOMMANDS.join(", ")
            )))
        }
    }
    Ok(out)
}

pub fn fixtures_list() -> Outcome {
    let mut out = Outcome::new("fixtures list");
    for f in fixtures::all() {
        out.lines.push(format!("{:<8} {}", f.name, f.description));
    }
    out
}

/// Writes `<dir>/<name>.json` and echoes the bundle.
pub fn fixtures_emit(name: &str, dir: &Path) -> Result<Outcome, CliError> {
    let f = fixtures::by_name(name)
        .ok_or_else(|| CliError::Input(format!("unknown fixture {name:?}")))?;
    let file = fixture_file(&f);
    let path = write_object(dir, &file)?;
    let mut out = Outcome::new(format!("fixtures emit {}", f.name));
    out.lines.push(format!("wrote {}", path.display()));
    out.objects.push(file);
    Ok(out)
}

/// Writes one definition file as `<dir>/<name>.json`.
pub fn write_object(dir: &Path, f: &DefinitionFile) -> Result<std::path::PathBuf, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{}.json", f.name));
    std::fs::write(&path, f.to_json() + "\n")
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(path)
}
