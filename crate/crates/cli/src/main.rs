use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use flagbodies::exactalg::format_rational;
use flagbodies::nobody::{run_grid, verdict, GridConfig, Pipeline};
use flagbodies::patterns::{fflv_polytope, gz_lattice, gz_polytope};
use flagbodies::polytope::{
    ehrhart_count, f_vector, h_to_v, lattice_points, normalized_volume, parse_polytope_json, v_to_h, HPolytope,
    LatticeSpec,
};
use flagbodies::rootdata::{degree_oracle, weyl_dim, DominantWeight, Family, GroupType};
use flagbodies::valuation::{product_generators, span_valuation_image, valuation_image, ProductCap};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] flagbodies::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Parser)]
#[command(name = "flagbodies", version, about = "Newton-Okounkov polytopes of classical flag varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A dominant weight: either integer orthogonal coordinates or Dynkin labels.
#[derive(Args, Clone)]
struct WeightArgs {
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// Orthogonal coordinates, e.g. 1,0,-1 (type A takes rank + 1 entries).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "omega", required_unless_present = "omega")]
    weight: Option<String>,
    /// Coordinates in the basis of fundamental weights; the only way to give spin weights.
    #[arg(long)]
    omega: Option<String>,
}

#[derive(Args, Clone)]
struct GroupArgs {
    #[arg(long = "type", value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum CellFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the irreducible representation.
    Dim(WeightArgs),
    /// Degree of the flag variety in the projective embedding of the weight.
    Degree(WeightArgs),
    /// Coordinates of the open Schubert cell.
    Cell {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: CellFormat,
    },
    /// Valuations of the Plücker sections of the fundamental weights in the weight.
    ValuationImage {
        #[command(flatten)]
        weight: WeightArgs,
        /// Valuations of the products of sections, one factor per multiplicity.
        #[arg(long)]
        k_products: bool,
    },
    /// Vertices of a polytope given by points or inequalities.
    Hull {
        file: Option<PathBuf>,
        /// Emit the facet description instead.
        #[arg(long)]
        hrep: bool,
    },
    /// Normalised volume in the affine hull.
    Volume { file: Option<PathBuf> },
    /// Lattice points of the dilates 0..=k.
    Ehrhart {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: u32,
    },
    /// Equality, inclusion and f-vectors of two polytopes.
    Compare { first: PathBuf, second: PathBuf },
    /// Gelfand-Zetlin polytope.
    Gz(PatternArgs),
    /// FFLV polytope (types A and C).
    Fflv(PatternArgs),
    /// Certifies the Newton-Okounkov body of a weight, optionally against a reference.
    Certify {
        #[command(flatten)]
        weight: WeightArgs,
        /// `fflv`, `gz` or a JSON polytope file.
        #[arg(long)]
        reference: Option<String>,
    },
    /// Certifies every weight of a TOML grid.
    Report {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct PatternArgs {
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long)]
    lattice_points: bool,
    #[arg(long)]
    volume: bool,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: flagbodies::Error| e.to_string())
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("not an integer: {t:?}"))))
        .collect()
}

impl WeightArgs {
    fn resolve(&self) -> Result<DominantWeight> {
        let group = GroupType::new(self.family, self.rank)?;
        match (&self.weight, &self.omega) {
            (Some(w), _) => Ok(DominantWeight::from_lambda(group, &parse_list(w)?)?),
            (None, Some(o)) => {
                let labels = parse_list(o)?
                    .into_iter()
                    .map(|x| u32::try_from(x).map_err(|_| CliError::Usage(format!("negative label {x}"))))
                    .collect::<Result<Vec<u32>>>()?;
                Ok(DominantWeight::from_labels(group, labels)?)
            }
            (None, None) => Err(CliError::Usage("give --weight or --omega".into())),
        }
    }
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    match file {
        Some(p) => fs::read_to_string(p).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
            Ok(s)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serialisable"));
}

fn pattern(args: &PatternArgs, gz: bool) -> Result<()> {
    let w = args.weight.resolve()?;
    let (h, lattice) =
        if gz { (gz_polytope(&w)?, gz_lattice(&w)) } else { (fflv_polytope(&w)?, LatticeSpec::Standard) };
    let mut out = h.to_json();
    if args.lattice_points {
        out["lattice_points"] = json!(lattice_points(&h, lattice)?.len());
    }
    if args.volume {
        out["normalized_volume"] = json!(format_rational(&normalized_volume(&h_to_v(&h)?)));
    }
    print_json(&out);
    Ok(())
}

fn cell_text(c: &flagbodies::CellModel) -> String {
    let n = c.n();
    let mut s = String::new();
    for r in 0..n {
        let row: Vec<String> = (0..n).map(|col| c.entry(r, col).to_string()).collect();
        s.push_str(&row.join("\t"));
        s.push('\n');
    }
    for (k, (r, col)) in c.positions().iter().enumerate() {
        s.push_str(&format!("y{} = x[{},{}]\n", k + 1, r + 1, col + 1));
    }
    s
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Dim(w) => println!("{}", weyl_dim(&w.resolve()?)),
        Command::Degree(w) => println!("{}", degree_oracle(&w.resolve()?)),
        Command::Cell { group, format } => {
            let cell = Pipeline::new().cell(GroupType::new(group.family, group.rank)?)?;
            match format {
                CellFormat::Json => print_json(&cell.to_json()),
                CellFormat::Text => print!("{}", cell_text(&cell)),
            }
        }
        Command::ValuationImage { weight, k_products } => {
            let w = weight.resolve()?;
            let p = Pipeline::new();
            let cell = p.cell(w.group())?;
            let used: Vec<(usize, u32)> =
                w.labels().iter().enumerate().filter(|(_, &m)| m > 0).map(|(k, &m)| (k + 1, m)).collect();
            let mut fundamentals = Vec::new();
            for &(k, _) in &used {
                fundamentals.push(p.fundamental(w.group(), k)?);
            }
            let out = if k_products {
                let spaces: Vec<_> = fundamentals.iter().map(|f| f.space.clone()).collect();
                let mult: Vec<u32> = used.iter().map(|&(_, m)| m).collect();
                let prods = product_generators(&spaces, &mult, ProductCap::default())?;
                let pts: Vec<Vec<i64>> =
                    valuation_image(&prods, cell.order())?.into_iter().map(|v| v.coords().to_vec()).collect();
                let span: Vec<Vec<i64>> =
                    span_valuation_image(&prods, cell.order())?.into_iter().map(|v| v.coords().to_vec()).collect();
                json!({"products": prods.len(), "points": pts, "span_points": span})
            } else {
                let per: Vec<Value> = fundamentals
                    .iter()
                    .map(|f| {
                        json!({
                            "k": f.space.k,
                            "labels": f.space.weight.labels(),
                            "points": f.points.iter().map(|v| v.coords().to_vec()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                json!({"fundamentals": per})
            };
            print_json(&out);
        }
        Command::Hull { file, hrep } => {
            let p = parse_polytope_json(&read_input(&file)?)?.into_v()?;
            print_json(&if hrep { v_to_h(&p).to_json() } else { p.to_json() });
        }
        Command::Volume { file } => {
            let p = parse_polytope_json(&read_input(&file)?)?.into_v()?;
            print_json(&json!({
                "affine_dim": p.affine_dim(),
                "normalized_volume": format_rational(&normalized_volume(&p)),
            }));
        }
        Command::Ehrhart { file, k } => {
            let h = parse_polytope_json(&read_input(&file)?)?.into_h()?;
            let counts = (0..=k)
                .map(|t| ehrhart_count(&h, t, &LatticeSpec::Standard))
                .collect::<flagbodies::Result<Vec<u64>>>()?;
            print_json(&json!({"counts": counts}));
        }
        Command::Compare { first, second } => {
            let a = parse_polytope_json(&read_input(&Some(first))?)?.into_v()?;
            let b = parse_polytope_json(&read_input(&Some(second))?)?.into_v()?;
            let v = verdict(&a, &b)?;
            print_json(&json!({
                "verdict": v.as_str(),
                "first_f_vector": f_vector(&a),
                "second_f_vector": f_vector(&b),
            }));
        }
        Command::Gz(args) => pattern(&args, true)?,
        Command::Fflv(args) => pattern(&args, false)?,
        Command::Certify { weight, reference } => {
            let w = weight.resolve()?;
            let p = Pipeline::new();
            let report = match reference.as_deref() {
                None => flagbodies::CertificationReport {
                    result: p.certify(&w)?,
                    reference: None,
                    verdict: None,
                    diagnostics: None,
                },
                Some(name @ "fflv") => p.compare_with_reference(&w, name, &fflv_polytope(&w)?)?,
                Some(name @ "gz") => p.compare_with_reference(&w, name, &gz_polytope(&w)?)?,
                Some(path) => {
                    let h: HPolytope = parse_polytope_json(&read_input(&Some(PathBuf::from(path)))?)?.into_h()?;
                    p.compare_with_reference(&w, path, &h)?
                }
            };
            print_json(&report.to_json());
            return Ok(report.success());
        }
        Command::Report { grid, format } => {
            let text = read_input(&Some(grid))?;
            let report = run_grid(&Pipeline::new(), &GridConfig::from_toml(&text)?)?;
            match format {
                ReportFormat::Text => println!("{report}"),
                ReportFormat::Json => print_json(&report.to_json()),
                ReportFormat::Both => {
                    println!("{report}\n");
                    print_json(&report.to_json());
                }
            }
            return Ok(report.success());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
