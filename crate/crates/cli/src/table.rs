use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use celine_core::angular::{clebsch, threej, CgArgs, ThreeJArgs};
use celine_core::SqrtRational;

use crate::parse::half;
use crate::render::sig15;
use crate::Failure;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableQuantity {
    Threej,
    Clebsch,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    pub quantity: TableQuantity,
    /// Largest angular momentum, as n or p/2.
    #[arg(long)]
    pub jmax: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub const CSV_HEADER: &str = "twice_j1,twice_j2,twice_j3,twice_m1,twice_m2,twice_m3,exact,decimal";

/// One tabulated value. For Clebsch–Gordan rows `(j1, j2, j3; m1, m2, m3)`
/// stand for `(a, b, c; α, β, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub twice_j1: i64,
    pub twice_j2: i64,
    pub twice_j3: i64,
    pub twice_m1: i64,
    pub twice_m2: i64,
    pub twice_m3: i64,
    pub exact: String,
    pub decimal: String,
}

impl Row {
    fn new(t: [i64; 6], value: &SqrtRational) -> Self {
        Row {
            twice_j1: t[0],
            twice_j2: t[1],
            twice_j3: t[2],
            twice_m1: t[3],
            twice_m2: t[4],
            twice_m3: t[5],
            exact: value.to_string(),
            decimal: sig15(value.to_f64()),
        }
    }

    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.twice_j1,
            self.twice_j2,
            self.twice_j3,
            self.twice_m1,
            self.twice_m2,
            self.twice_m3,
            self.exact,
            self.decimal
        )
    }
}

pub fn rows(quantity: TableQuantity, jmax: celine_core::HalfInt) -> Result<Vec<Row>, Failure> {
    let tuples = ThreeJArgs::enumerate(jmax);
    let mut rows = Vec::with_capacity(tuples.len());
    match quantity {
        TableQuantity::Threej => {
            for args in tuples {
                rows.push(Row::new(args.twice(), &threej(&args)?));
            }
        }
        TableQuantity::Clebsch => {
            for args in tuples {
                let cg = CgArgs::new(args.j1, args.m1, args.j2, args.m2, args.j3, -args.m3);
                let t = [cg.a, cg.b, cg.c, cg.alpha, cg.beta, cg.gamma].map(|h| h.twice());
                rows.push(Row::new(t, &clebsch(&cg)?));
            }
            rows.sort_by_key(|r| [r.twice_j1, r.twice_j2, r.twice_j3, r.twice_m1, r.twice_m2, r.twice_m3]);
        }
    }
    Ok(rows)
}

pub fn render(rows: &[Row], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in rows {
                s.push_str(&r.csv());
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
    }
}

pub fn run(args: &TableArgs) -> Result<(), Failure> {
    let jmax = half(&args.jmax)?;
    if jmax.twice() < 0 {
        return Err(Failure::Usage("--jmax must be nonnegative".into()));
    }
    let text = render(&rows(args.quantity, jmax)?, args.format);
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write to standard output: {e}"))),
    }
}
