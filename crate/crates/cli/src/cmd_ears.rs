use anyhow::{anyhow, Result};
use clap::Subcommand;
use ears_core::ears::{
    affine_localize, axioms_check, closedness_check, filtration_build, finite_localize, semilattice_closure_check,
    subsystem_rt, ClosedMode, Decomposition, EarsDatum, EarsRoot, LemmaInput, RootSet, SubsystemView,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::input::{self, parse_vec};
use crate::render::{self, grid, json, report_text, vec_str};
use crate::{Cli, Format, Output};

#[derive(Subcommand, Debug)]
pub enum EarsCmd {
    /// Parse and validate a datum; print its canonical form and root counts
    Build {
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Run the axiom suite R1–R8 in the box
    Check {
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Subsystem generated by the roots in "T" (random connected T if absent)
    Subsystem {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, default_value = "closed")]
        mode: ClosedMode,
    },
    /// Affine localization at an isotropic root ("delta" or --delta)
    Affinize {
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
    },
    /// Finite localization generated by "T"
    Finite {
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Filtration R_0 ⊆ … ⊆ R_ν from the basis "sigma"
    Filter {
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Semilattice closure check for S̃ = S̃₁ ⊕ Λ′₂
    #[command(name = "lemma-s1")]
    LemmaS1 {
        #[arg(long = "in")]
        input: Option<String>,
    },
}

#[derive(Serialize)]
struct DatumSummary {
    label: String,
    nullity: usize,
    index_s: usize,
    index_l: Option<usize>,
    s_is_lattice: bool,
    r0_cosets: Vec<Vec<i64>>,
    box_bound: i64,
    nonisotropic_in_box: usize,
    isotropic_in_box: usize,
}

#[derive(Serialize)]
struct BuildOut {
    datum: EarsDatum,
    summary: DatumSummary,
}

#[derive(Serialize)]
struct SubsystemOut {
    #[serde(rename = "T")]
    t: Vec<EarsRoot>,
    subsystem: ears_core::ears::SubsystemSummary,
    closedness: ears_core::Report,
}

pub fn run(cmd: &EarsCmd, cli: &Cli) -> Result<Output> {
    let fmt = cli.format;
    let b = cli.bx;
    match cmd {
        EarsCmd::Build { input } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let roots = r.enumerate(b);
            let iso = roots.iter().filter(|x| x.is_isotropic()).count();
            let summary = DatumSummary {
                label: r.finite().label(),
                nullity: r.nu(),
                index_s: r.s().index(),
                index_l: r.l().map(|l| l.index()),
                s_is_lattice: r.s().is_lattice(),
                r0_cosets: r.r0().reps(),
                box_bound: b,
                nonisotropic_in_box: roots.len() - iso,
                isotropic_in_box: iso,
            };
            let text = match fmt {
                Format::Json => json(&BuildOut { datum: r, summary })?,
                Format::Table => grid(&[
                    vec!["type".into(), summary.label],
                    vec!["nullity".into(), summary.nullity.to_string()],
                    vec!["ind(S)".into(), summary.index_s.to_string()],
                    vec!["ind(L)".into(), summary.index_l.map_or("-".into(), |x| x.to_string())],
                    vec!["R0 cosets".into(), summary.r0_cosets.iter().map(|c| vec_str(c)).collect::<Vec<_>>().join(" ")],
                    vec![format!("nonisotropic in box {b}"), summary.nonisotropic_in_box.to_string()],
                    vec![format!("isotropic in box {b}"), summary.isotropic_in_box.to_string()],
                ]),
            };
            Ok(Output { text, ok: true })
        }
        EarsCmd::Check { input } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            render::report(fmt, "axioms", &axioms_check(&r, b))
        }
        EarsCmd::Subsystem { input, mode } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let t = match v.get("T") {
                Some(_) => input::roots(&v, "T")?,
                None => random_t(&r, cli.seed)?,
            };
            let view = subsystem_rt(&r, &t)?;
            view_out(fmt, t, &view, &r, b, *mode)
        }
        EarsCmd::Affinize { input, delta } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let d = match delta {
                Some(s) => parse_vec(s)?,
                None => input::field::<Vec<i64>>(&v, "delta")?,
            };
            let dr = EarsRoot::isotropic(r.finite().rank(), d);
            let view = affine_localize(&r, &dr)?;
            view_out(fmt, vec![dr], &view, &r, b, ClosedMode::Closed)
        }
        EarsCmd::Finite { input } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let t = input::roots(&v, "T")?;
            let view = finite_localize(&r, &t)?;
            view_out(fmt, t, &view, &r, b, ClosedMode::Closed)
        }
        EarsCmd::Filter { input } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let sigma: Vec<Vec<i64>> = input::field(&v, "sigma")?;
            let dec: Option<Decomposition> = input::opt_field(&v, "decomposition")?;
            let f = filtration_build(&r, &sigma, dec.as_ref(), b)?;
            let s = f.summary();
            let ok = s.report.is_ok();
            let text = match fmt {
                Format::Json => json(&s)?,
                Format::Table => {
                    let mut rows = vec![vec!["k".into(), "type".into(), "rank".into(), "nullity".into(), "isotropic lattice".into()]];
                    for (k, l) in s.links.iter().enumerate() {
                        rows.push(vec![
                            k.to_string(),
                            l.type_label.clone(),
                            l.rank.to_string(),
                            l.nullity.to_string(),
                            l.isotropic_lattice.iter().map(|c| vec_str(c)).collect::<Vec<_>>().join(" "),
                        ]);
                    }
                    grid(&rows) + &report_text("filtration", &s.report)
                }
            };
            Ok(Output { text, ok })
        }
        EarsCmd::LemmaS1 { input } => {
            let v = input::load(input.as_deref())?;
            let r = input::datum(&v)?;
            let li = lemma_input(&r, &v)?;
            render::report(fmt, "semilattice closure", &semilattice_closure_check(&r, &li, b))
        }
    }
}

/// Either an explicit {decomposition, s1_tilde, lambda2_prime} or
/// {decomposition, u1, lambda2_prime} with S̃₁ = S ∩ U₁.
fn lemma_input(r: &EarsDatum, v: &Value) -> Result<LemmaInput> {
    let dec: Decomposition = input::field(v, "decomposition")?;
    let l2p: Vec<Vec<i64>> = input::opt_field(v, "lambda2_prime")?.unwrap_or_default();
    if let Some(u1) = input::opt_field::<Vec<Vec<i64>>>(v, "u1")? {
        return Ok(LemmaInput::restricted(r.s(), dec, &u1, l2p)?);
    }
    Ok(LemmaInput { decomposition: dec, s1_tilde: input::field(v, "s1_tilde")?, lambda2_prime: l2p })
}

fn view_out(fmt: Format, t: Vec<EarsRoot>, view: &SubsystemView, host: &EarsDatum, b: i64, mode: ClosedMode) -> Result<Output> {
    let closed = closedness_check(view, host, b, mode);
    let out = SubsystemOut { t, subsystem: view.summary(), closedness: closed };
    let ok = out.closedness.is_ok();
    let text = match fmt {
        Format::Json => json(&out)?,
        Format::Table => {
            let s = &out.subsystem;
            let gens: Vec<String> = out.t.iter().map(|x| x.to_string()).collect();
            grid(&[
                vec!["T".into(), gens.join(", ")],
                vec!["type".into(), s.type_label.clone()],
                vec!["rank".into(), s.rank.to_string()],
                vec!["nullity".into(), s.nullity.to_string()],
                vec!["isotropic lattice".into(), s.isotropic_lattice.iter().map(|c| vec_str(c)).collect::<Vec<_>>().join(" ")],
            ]) + &report_text("closedness", &out.closedness)
        }
    };
    Ok(Output { text, ok })
}

/// A connected set of one to three nonisotropic roots from box 2.
fn random_t(r: &EarsDatum, seed: u64) -> Result<Vec<EarsRoot>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool: Vec<EarsRoot> = r.enumerate(2).into_iter().filter(|x| !x.is_isotropic()).collect();
    let first = pool.choose(&mut rng).ok_or_else(|| anyhow!("no nonisotropic roots in box 2"))?.clone();
    let mut t = vec![first];
    let want = 1 + (seed % 3) as usize;
    let fin = r.finite();
    while t.len() < want {
        let cands: Vec<&EarsRoot> = pool
            .iter()
            .filter(|x| !t.contains(x) && t.iter().any(|y| fin.form(&x.finite, &y.finite) != 0))
            .collect();
        match cands.choose(&mut rng) {
            Some(x) => t.push((*x).clone()),
            None => break,
        }
    }
    Ok(t)
}
