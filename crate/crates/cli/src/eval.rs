use clap::{Args, ValueEnum};

use celine_core::angular::{character, clebsch, gen_character, threej, wigner_d, CgArgs, ThreeJArgs};
use celine_core::polyfam::{ahmad_a, celine_f, hahn, jacobi, jain_j, khan_f, rice_h, shah_f};

use crate::parse::{angle, half, list, rational, required, triple, uint};
use crate::render::{exact_rational, exact_sqrt, sig15};
use crate::Failure;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Quantity {
    Threej,
    Clebsch,
    WignerD,
    Character,
    GenCharacter,
    Jacobi,
    Hahn,
    Celine,
    Jain,
    Shah,
    Khan,
    Rice,
    Ahmad,
}

/// Flags shared by all quantities; each quantity reads the ones it needs.
#[derive(Args, Debug)]
pub struct EvalArgs {
    pub quantity: Quantity,
    /// Angular momenta: three for threej/clebsch (a b c), one otherwise.
    #[arg(long, num_args = 1..=3)]
    pub j: Option<Vec<String>>,
    /// Projections (three for threej/clebsch: α β γ), or Shah's block size.
    #[arg(long, num_args = 1..=3)]
    pub m: Option<Vec<String>>,
    /// Second projection of wigner-d, or the block size of jain/khan.
    #[arg(long)]
    pub k: Option<String>,
    /// Polynomial degree.
    #[arg(short = 'n', long = "degree")]
    pub n: Option<String>,
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    /// Argument; for hahn the integer lattice point.
    #[arg(long)]
    pub x: Option<String>,
    /// Hahn's N.
    #[arg(short = 'N', long = "big-n")]
    pub big_n: Option<String>,
    /// Rotation angle for wigner-d.
    #[arg(long)]
    pub theta: Option<String>,
    /// Rotation angle for characters.
    #[arg(long)]
    pub omega: Option<String>,
    /// Order of a generalized character, or the λ of shah/khan.
    #[arg(long)]
    pub lambda: Option<String>,
    #[arg(long)]
    pub mu: Option<String>,
    /// Jain's c.
    #[arg(long)]
    pub c: Option<String>,
    #[arg(long)]
    pub xi: Option<String>,
    #[arg(long)]
    pub p: Option<String>,
    /// Extra numerator parameters, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<String>,
    /// Extra denominator parameters, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub b: Vec<String>,
}

fn single(values: &Option<Vec<String>>, flag: &str) -> Result<String, Failure> {
    match values.as_deref() {
        Some([v]) => Ok(v.clone()),
        Some(_) => Err(Failure::Usage(format!("--{flag} takes one value here"))),
        None => Err(Failure::Usage(format!("missing --{flag}"))),
    }
}

pub fn evaluate(args: &EvalArgs) -> Result<String, Failure> {
    let rat = |v: &Option<String>, flag: &str| required(v, flag).and_then(rational);
    let int = |v: &Option<String>, flag: &str| required(v, flag).and_then(uint);
    let hi = |v: &Option<String>, flag: &str| required(v, flag).and_then(half);
    let out = match args.quantity {
        Quantity::Threej => {
            let j = triple(&args.j, "j", half)?;
            let m = triple(&args.m, "m", half)?;
            exact_sqrt(&threej(&ThreeJArgs::new(j, m))?)
        }
        Quantity::Clebsch => {
            let [a, b, c] = triple(&args.j, "j", half)?;
            let [alpha, beta, gamma] = triple(&args.m, "m", half)?;
            exact_sqrt(&clebsch(&CgArgs::new(a, alpha, b, beta, c, gamma))?)
        }
        Quantity::WignerD => {
            let j = half(&single(&args.j, "j")?)?;
            let m = half(&single(&args.m, "m")?)?;
            let k = hi(&args.k, "k")?;
            let theta = required(&args.theta, "theta").and_then(angle)?;
            sig15(wigner_d(j, m, k, theta)?)
        }
        Quantity::Character => {
            let j = half(&single(&args.j, "j")?)?;
            let omega = required(&args.omega, "omega").and_then(angle)?;
            sig15(character(j, omega)?)
        }
        Quantity::GenCharacter => {
            let j = half(&single(&args.j, "j")?)?;
            let lambda = hi(&args.lambda, "lambda")?;
            let omega = required(&args.omega, "omega").and_then(angle)?;
            sig15(gen_character(j, lambda, omega)?)
        }
        Quantity::Jacobi => exact_rational(&jacobi(
            int(&args.n, "degree")?,
            &rat(&args.alpha, "alpha")?,
            &rat(&args.beta, "beta")?,
            &rat(&args.x, "x")?,
        )?),
        Quantity::Hahn => exact_rational(&hahn(
            int(&args.n, "degree")?,
            &rational(&int(&args.x, "x")?.to_string())?,
            &rat(&args.alpha, "alpha")?,
            &rat(&args.beta, "beta")?,
            int(&args.big_n, "big-n")?,
        )?),
        Quantity::Celine => {
            exact_rational(&celine_f(&list(&args.a)?, &list(&args.b)?, &rat(&args.x, "x")?, int(&args.n, "degree")?)?)
        }
        Quantity::Jain => exact_rational(&jain_j(
            &rat(&args.c, "c")?,
            int(&args.k, "k")?,
            &list(&args.a)?,
            &list(&args.b)?,
            &rat(&args.x, "x")?,
            int(&args.n, "degree")?,
        )?),
        Quantity::Shah => exact_rational(&shah_f(
            uint(&single(&args.m, "m")?)?,
            &rat(&args.lambda, "lambda")?,
            &rat(&args.mu, "mu")?,
            &list(&args.a)?,
            &list(&args.b)?,
            &rat(&args.x, "x")?,
            int(&args.n, "degree")?,
        )?),
        Quantity::Khan => exact_rational(&khan_f(
            int(&args.k, "k")?,
            &rat(&args.lambda, "lambda")?,
            &rat(&args.mu, "mu")?,
            &list(&args.a)?,
            &list(&args.b)?,
            &rat(&args.x, "x")?,
            int(&args.n, "degree")?,
        )?),
        Quantity::Rice => exact_rational(&rice_h(
            int(&args.n, "degree")?,
            &rat(&args.alpha, "alpha")?,
            &rat(&args.beta, "beta")?,
            &rat(&args.xi, "xi")?,
            &rat(&args.p, "p")?,
            &rat(&args.x, "x")?,
        )?),
        Quantity::Ahmad => exact_rational(&ahmad_a(
            &rat(&args.alpha, "alpha")?,
            &rat(&args.beta, "beta")?,
            &list(&args.a)?,
            &list(&args.b)?,
            &rat(&args.x, "x")?,
            int(&args.n, "degree")?,
        )?),
    };
    Ok(out)
}

pub fn run(args: &EvalArgs) -> Result<(), Failure> {
    println!("{}", evaluate(args)?);
    Ok(())
}
