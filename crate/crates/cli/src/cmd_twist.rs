use anyhow::Result;
use clap::{Args, Subcommand};
use ears_core::finroots::{build_finite, diagram_automorphism, CartanType};
use ears_core::twist::TwistDatum;
use serde::Serialize;

use crate::render::{grid, json};
use crate::{Cli, Format, Output};

#[derive(Args, Debug, Clone)]
pub struct TwistArgs {
    /// Cartan type letter
    #[arg(long = "type")]
    pub ty: CartanType,
    #[arg(long)]
    pub rank: usize,
    /// Order of the diagram automorphism (1 or prime)
    #[arg(long)]
    pub order: u32,
}

#[derive(Subcommand, Debug)]
pub enum TwistCmd {
    /// ⟨σ⟩-orbits on the positive roots
    Orbits {
        #[command(flatten)]
        t: TwistArgs,
    },
    /// π_k of each orbit representative, in a basis of projected simple roots
    Proj {
        #[command(flatten)]
        t: TwistArgs,
    },
    /// dim of the isotropic root spaces kδ for k = 1..kmax
    Dims {
        #[command(flatten)]
        t: TwistArgs,
        #[arg(long, default_value_t = 6)]
        kmax: i64,
        /// Also list every affinized root π(α)+iδ with |i| ≤ box
        #[arg(long)]
        roots: bool,
    },
    /// π(α) = π(β) only within a single orbit
    Separation {
        #[command(flatten)]
        t: TwistArgs,
    },
}

fn datum(t: &TwistArgs) -> Result<TwistDatum> {
    let r = build_finite(t.ty, t.rank)?;
    let s = diagram_automorphism(&r, t.order)?;
    Ok(TwistDatum::new(r, s)?)
}

#[derive(Serialize)]
struct DimsOut {
    dims: Vec<ears_core::twist::IsotropicDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    roots: Option<Vec<ears_core::twist::AffinizedRow>>,
}

pub fn run(cmd: &TwistCmd, cli: &Cli) -> Result<Output> {
    let fmt = cli.format;
    match cmd {
        TwistCmd::Orbits { t } => {
            let d = datum(t)?;
            let text = match fmt {
                Format::Json => json(&d.orbit_rows(true))?,
                Format::Table => d.orbit_table_text(),
            };
            Ok(Output { text, ok: true })
        }
        TwistCmd::Proj { t } => {
            let d = datum(t)?;
            let text = match fmt {
                Format::Json => json(&d.projection_table())?,
                Format::Table => d.projection_table_text(),
            };
            Ok(Output { text, ok: true })
        }
        TwistCmd::Dims { t, kmax, roots } => {
            let d = datum(t)?;
            let dims = (1..=*kmax).map(|k| d.isotropic_dim(k)).collect::<ears_core::Result<Vec<_>>>()?;
            let roots = if *roots { Some(d.affinized_root_data(cli.bx)?) } else { None };
            let text = match fmt {
                Format::Json => json(&DimsOut { dims, roots })?,
                Format::Table => {
                    let mut rows = vec![vec!["k".into(), "dim".into(), "n_sigma_k".into(), "dim pi_k(h)".into()]];
                    for x in &dims {
                        rows.push(vec![x.k.to_string(), x.dim.to_string(), x.n_sigma_k.to_string(), x.cartan_bound.to_string()]);
                    }
                    let mut s = grid(&rows);
                    if let Some(rs) = roots {
                        s.push('\n');
                        let mut rows = vec![vec!["pi(alpha)".into(), "i".into(), "dim".into()]];
                        for r in rs {
                            rows.push(vec![format!("({})", r.pi.join(",")), r.i.to_string(), r.dim.to_string()]);
                        }
                        s.push_str(&grid(&rows));
                    }
                    s
                }
            };
            Ok(Output { text, ok: true })
        }
        TwistCmd::Separation { t } => {
            let d = datum(t)?;
            let rep = d.separation_check();
            let text = match fmt {
                Format::Json => json(&rep)?,
                Format::Table => {
                    let mut s = format!("separated: {} ({} pairs)\n", rep.separated, rep.pairs_checked);
                    for (a, b) in &rep.witnesses {
                        s.push_str(&format!("  {a:?} ~ {b:?}\n"));
                    }
                    s
                }
            };
            Ok(Output { text, ok: rep.separated })
        }
    }
}
