use anyhow::Result;
use clap::Subcommand;
use ears_core::lattice::Semilattice;
use ears_core::realize::{rokn3_check, tkk_bracket_class, toroidal_isotropic_space, BlDatum, JordanTorus, TkkClass};

use crate::input::{self, parse_vec};
use crate::render::{self, grid, json};
use crate::{Cli, Format, Output};

#[derive(Subcommand, Debug)]
pub enum RealizeCmd {
    /// Isotropic part spanned by [E_{α+rδ}, E_{-α+sδ}], r+s = k, in the toroidal sl_{ℓ+1}
    Toroidal {
        #[arg(long)]
        l: usize,
        #[arg(long, default_value_t = 2)]
        nu: usize,
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    /// Same for the B_ℓ matrix realization over a semilattice S
    Bl {
        #[arg(long)]
        l: usize,
        /// Semilattice JSON (path or inline); default {0,(1,0),(0,1)} + 2Z²
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    /// A1 Jordan-torus bracket classes: case formula against direct evaluation
    #[command(name = "a1-tkk")]
    A1Tkk {
        #[arg(long = "in")]
        input: Option<String>,
        /// coset index i of λ_i = τ_i
        #[arg(long)]
        i: usize,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        /// n (n′ = t − n); all splits with |n|, |n′| ≤ 3 if omitted
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Operator identities of the A1 Jordan torus, checked on the box
    #[command(name = "a1-rokn3")]
    A1Rokn3 {
        #[arg(long = "in")]
        input: Option<String>,
    },
}

fn semilattice(arg: Option<&str>) -> Result<Semilattice> {
    match arg {
        None => Ok(Semilattice::standard(2, vec![vec![0, 0], vec![1, 0], vec![0, 1]])?),
        Some(a) => {
            let v = input::load(Some(a))?;
            Ok(serde_json::from_value(v.get("S").unwrap_or(&v).clone())?)
        }
    }
}

pub fn run(cmd: &RealizeCmd, cli: &Cli) -> Result<Output> {
    let fmt = cli.format;
    let b = cli.bx;
    match cmd {
        RealizeCmd::Toroidal { l, nu, delta, k } => {
            let sp = toroidal_isotropic_space(*l, *nu, &parse_vec(delta)?, *k, b)?;
            let text = match fmt {
                Format::Json => json(&sp)?,
                Format::Table => format!("dim = {}\nbasis: {}\n", sp.dim, sp.basis.join(", ")),
            };
            Ok(Output { text, ok: true })
        }
        RealizeCmd::Bl { l, input, sigma, k } => {
            let bl = BlDatum::new(*l, semilattice(input.as_deref())?)?;
            let r = bl.isotropic_dim(&parse_vec(sigma)?, *k, b)?;
            let ok = r.dim == r.expected;
            let text = match fmt {
                Format::Json => json(&r)?,
                Format::Table => format!("dim = {} (expected {})\nbasis: {}\n", r.dim, r.expected, r.basis.join(", ")),
            };
            Ok(Output { text, ok })
        }
        RealizeCmd::A1Tkk { input, i, sigma, t, n } => {
            let jt = JordanTorus::new(semilattice(input.as_deref())?)?;
            let s = parse_vec(sigma)?;
            if *i >= jt.num_cosets() || s.len() != jt.semilattice().dim() {
                anyhow::bail!("need a coset index below {} and σ of length {}", jt.num_cosets(), jt.semilattice().dim());
            }
            let splits: Vec<i64> = match n {
                Some(n) => vec![*n],
                None => {
                    let lam = jt.tau(*i).to_vec();
                    let member = |a: i64, m: i64| {
                        let e: Vec<i64> = lam.iter().zip(&s).map(|(l, x)| a * l + m * x).collect();
                        jt.semilattice().contains(&e)
                    };
                    (-3..=3).filter(|n| (t - n).abs() <= 3 && member(1, *n) && member(-1, t - n)).collect()
                }
            };
            let classes =
                splits.iter().map(|&n| tkk_bracket_class(&jt, *i, &s, n, t - n, b)).collect::<ears_core::Result<Vec<TkkClass>>>()?;
            let ok = classes.iter().all(|c| c.agree);
            let text = match fmt {
                Format::Json => json(&classes)?,
                Format::Table => {
                    let mut rows = vec![vec!["n".into(), "n'".into(), "case".into(), "formula".into(), "direct".into(), "agree".into()]];
                    for c in &classes {
                        rows.push(vec![
                            c.n.to_string(),
                            c.n_prime.to_string(),
                            c.case.to_string(),
                            c.formula.clone(),
                            c.direct.clone(),
                            c.agree.to_string(),
                        ]);
                    }
                    grid(&rows)
                }
            };
            Ok(Output { text, ok })
        }
        RealizeCmd::A1Rokn3 { input } => {
            let jt = JordanTorus::new(semilattice(input.as_deref())?)?;
            render::report(fmt, "jordan torus identities", &rokn3_check(&jt, b))
        }
    }
}
