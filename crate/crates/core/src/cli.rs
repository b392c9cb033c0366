//! The `subreg` command line, as a library function so that it can be driven
//! from tests.
//!
//! Exit codes: 0 on success, 1 when a `verify` check fails (the report is
//! still printed), 2 on usage errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::classify::{fibre_finite, orbital_variety_finite, richardson_finite, Witness};
use crate::curve::census::{b_orbit_count, fibre_orbit_census, LineVerdict, OrbitCount};
use crate::curve::{build_curve, Cell};
use crate::fforacle::{self, OrbitCensusFF, Subspace};
use crate::ideals::{ideal_closure, stats_of, witness_table, IdealStats};
use crate::matrixlie::{
    build_algebra, centralizer_dim, covered_alphas, dense_orbit_check, jordan_partition, subregular_rep, Family,
};
use crate::roots::{build_for, CartanType, Root, TypeLabel};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "subreg", version, about = "Subregular Springer fibres, Dynkin curves and Borel orbits")]
struct Cli {
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeArgs {
    #[arg(long = "type", value_parser = parse_label)]
    label: TypeLabel,
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn cartan_type(&self) -> Result<CartanType> {
        CartanType::new(self.label, self.rank)
    }
}

#[derive(Debug, Args)]
struct TypeAlphaArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Restrict to one simple root (1-based).
    #[arg(long)]
    alpha: Option<usize>,
}

impl TypeAlphaArgs {
    fn alphas(&self) -> Result<(CartanType, Vec<usize>)> {
        let t = self.ty.cartan_type()?;
        match self.alpha {
            Some(a) => {
                t.check_root(a)?;
                Ok((t, vec![a]))
            }
            None => Ok((t, (1..=t.rank).collect())),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cartan matrix, positive roots and highest root.
    Roots(TypeArgs),
    /// The Dynkin curve of the subregular Springer fibre.
    Curve(TypeArgs),
    #[command(subcommand)]
    Classify(ClassifyCmd),
    #[command(subcommand)]
    Census(CensusCmd),
    #[command(subcommand)]
    Ideals(IdealsCmd),
    #[command(subcommand)]
    Verify(VerifyCmd),
    #[command(subcommand)]
    Ff(FfCmd),
}

#[derive(Debug, Subcommand)]
enum ClassifyCmd {
    /// Finiteness of centralizer orbits on the lines of each type.
    Fibre(TypeAlphaArgs),
    /// Finiteness of B-orbits on the subregular part of each minimal nilradical.
    Richardson(TypeAlphaArgs),
    /// Finiteness of B-orbits on each subregular orbital variety.
    Orbital(TypeAlphaArgs),
}

#[derive(Debug, Subcommand)]
enum CensusCmd {
    /// Centralizer orbits on the fibre.
    Fibre(TypeArgs),
    /// B-orbits on the subregular part of each minimal nilradical.
    Borbit(TypeAlphaArgs),
}

#[derive(Debug, Subcommand)]
enum IdealsCmd {
    /// Dimensions for the ideal generated by the given simple root spaces.
    Stats {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<usize>,
    },
    /// The five witness ideals.
    Table,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// Checks one subregular representative in its matrix model.
    Rep(RepArgs),
    /// Checks every representative up to a rank, plus the finite-field counts.
    All {
        #[arg(long, default_value_t = 5)]
        max_rank: usize,
    },
}

#[derive(Debug, Args)]
struct RepArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    alpha: usize,
}

#[derive(Debug, Subcommand)]
enum FfCmd {
    /// Enumerate B(F_q)-orbits on u, u_alpha or u_alpha & u_beta.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, requires = "alpha")]
        beta: Option<usize>,
        /// Keep every point instead of the subregular class only.
        #[arg(long)]
        all_points: bool,
        /// Enumerate u_alpha & u_beta even for orthogonal roots.
        #[arg(long)]
        force: bool,
    },
}

fn parse_label(s: &str) -> std::result::Result<TypeLabel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsReport {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
    pub highest_root: Root,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreRow {
    pub alpha: usize,
    pub verdict: String,
    pub reason: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitalRow {
    pub alpha: usize,
    pub verdict: String,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport<R> {
    pub cartan_type: CartanType,
    pub rows: Vec<R>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorbitRow {
    pub alpha: usize,
    pub orbit_count: OrbitCount,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub cartan_type: CartanType,
    pub generators: Vec<usize>,
    pub roots: Vec<Root>,
    pub stats: IdealStats,
    pub infinite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub passed: bool,
}

fn verdict(finite: bool) -> String {
    if finite { "finite" } else { "infinite" }.to_string()
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((stdout, ok)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn no_dot(format: Format) -> Result<()> {
    if format == Format::Dot {
        return Err(Error::Usage("--format dot is only available for `curve`".into()));
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<(String, bool)> {
    let format = cli.format;
    if !matches!(cli.command, Command::Curve(_)) {
        no_dot(format)?;
    }
    let json_or = |value: &dyn erased::Render| -> String {
        match format {
            Format::Json => value.json(),
            _ => value.table(),
        }
    };
    let out = match &cli.command {
        Command::Roots(args) => {
            let rs = build_for(args.cartan_type()?);
            let report = RootsReport {
                cartan_type: rs.cartan_type,
                rank: rs.rank(),
                cartan: rs.cartan.clone(),
                positive_roots: rs.positive_roots.clone(),
                highest_root: rs.highest_root.clone(),
            };
            json_or(&report)
        }
        Command::Curve(args) => {
            let curve = build_curve(args.cartan_type()?);
            match format {
                Format::Dot => curve.to_dot(),
                Format::Json => json(&curve),
                Format::Table => {
                    let mut s = format!("Dynkin curve of {}\n", curve.cartan_type);
                    for l in &curve.lines {
                        let meets: Vec<String> = curve
                            .points_on(l.id)
                            .map(|p| {
                                let other = if p.lines[0] == l.id { p.lines[1] } else { p.lines[0] };
                                let o = &curve.lines[other];
                                format!("{}:{}", o.root_type, o.index)
                            })
                            .collect();
                        let _ = writeln!(
                            s,
                            "line {:>2}  type a{} #{}  meets [{}]",
                            l.id,
                            l.root_type,
                            l.index,
                            meets.join(", ")
                        );
                    }
                    let _ = writeln!(s, "{} lines, {} points", curve.lines.len(), curve.points.len());
                    s
                }
            }
        }
        Command::Classify(cmd) => match cmd {
            ClassifyCmd::Fibre(args) | ClassifyCmd::Richardson(args) => {
                let (t, alphas) = args.alphas()?;
                let richardson = matches!(cmd, ClassifyCmd::Richardson(_));
                let rows = alphas
                    .into_iter()
                    .map(|alpha| {
                        let v = fibre_finite(t, alpha)?;
                        let finite = if richardson { richardson_finite(t, alpha)? } else { v.finite };
                        Ok(FibreRow {
                            alpha,
                            verdict: verdict(finite),
                            reason: v.reason,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                json_or(&ClassifyReport { cartan_type: t, rows })
            }
            ClassifyCmd::Orbital(args) => {
                let (t, alphas) = args.alphas()?;
                let rows = alphas
                    .into_iter()
                    .map(|alpha| {
                        let v = orbital_variety_finite(t, alpha)?;
                        Ok(OrbitalRow {
                            alpha,
                            verdict: verdict(v.finite),
                            witness: v.witness,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                json_or(&ClassifyReport { cartan_type: t, rows })
            }
        },
        Command::Census(CensusCmd::Fibre(args)) => {
            let census = fibre_orbit_census(args.cartan_type()?);
            match format {
                Format::Json => json(&census),
                _ => {
                    let mut s = format!("Orbit census of {}\n", census.cartan_type);
                    for l in &census.lines {
                        let v = match l.verdict {
                            LineVerdict::Finite => "finite",
                            LineVerdict::TrivialAction => "trivial",
                        };
                        let _ = writeln!(
                            s,
                            "line {:>2}  a{} #{}  {:<8} coefficient {}",
                            l.line, l.root_type, l.index, v, l.reason
                        );
                    }
                    for (k, orbit) in census.orbits.iter().enumerate() {
                        let cells: Vec<String> = orbit.iter().map(cell_name).collect();
                        let _ = writeln!(s, "orbit {k}: {}", cells.join(" "));
                    }
                    let _ = writeln!(s, "total {}", census.total);
                    s
                }
            }
        }
        Command::Census(CensusCmd::Borbit(args)) => {
            let (t, alphas) = args.alphas()?;
            let rows = alphas
                .into_iter()
                .map(|alpha| {
                    Ok(BorbitRow {
                        alpha,
                        orbit_count: b_orbit_count(t, alpha)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            json_or(&ClassifyReport { cartan_type: t, rows })
        }
        Command::Ideals(IdealsCmd::Stats { ty, gens }) => {
            let t = ty.cartan_type()?;
            let rs = build_for(t);
            let ideal = ideal_closure(&rs, gens)?;
            let stats = stats_of(&rs, &ideal);
            let report = IdealReport {
                cartan_type: t,
                generators: ideal.generators,
                roots: ideal.roots,
                stats,
                infinite: stats.dim_b_mod_n < stats.dim_abelianization,
            };
            json_or(&report)
        }
        Command::Ideals(IdealsCmd::Table) => json_or(&witness_table()),
        Command::Verify(cmd) => {
            let report = match cmd {
                VerifyCmd::Rep(args) => verify_rep(args.family, args.n, args.alpha)?,
                VerifyCmd::All { max_rank } => verify_all(*max_rank)?,
            };
            let ok = report.passed;
            return Ok((json_or(&report), ok));
        }
        Command::Ff(FfCmd::Enumerate {
            family,
            n,
            q,
            alpha,
            beta,
            all_points,
            force,
        }) => {
            let alg = build_algebra(*family, *n)?;
            let census = match (alpha, beta) {
                (Some(a), Some(b)) if !all_points => fforacle::enumerate_cell_orbits(&alg, *q, *a, *b, *force)?,
                _ => {
                    let subspace = match (alpha, beta) {
                        (Some(a), Some(b)) => Subspace::Intersection { alpha: *a, beta: *b },
                        (Some(a), None) => Subspace::MinimalNilradical { alpha: *a },
                        _ => Subspace::Nilradical,
                    };
                    let filter = family.subregular_partition(*n);
                    let filter = if *all_points { None } else { Some(filter.as_slice()) };
                    fforacle::enumerate_b_orbits(&alg, *q, subspace, filter)?
                }
            };
            json_or(&census)
        }
    };
    Ok((out, true))
}

fn cell_name(c: &Cell) -> String {
    match c {
        Cell::IntersectionPoint(p) => format!("p{p}"),
        Cell::OpenPart(l) => format!("open{l}"),
    }
}

/// Checks one representative: Jordan class, form condition, centralizer
/// dimension, density of its `B`-orbit, and that `α` is not in its support.
pub fn verify_rep(family: Family, n: usize, alpha: usize) -> Result<VerifyReport> {
    let alg = build_algebra(family, n)?;
    let rep = subregular_rep(&alg, alpha)?;
    let tag = format!("{family}{n} a{alpha}");
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: format!("{tag}: {name}"),
            passed,
            detail,
        });
    };

    let expected = family.subregular_partition(n);
    let partition = jordan_partition(&rep.matrix)?;
    push("partition", partition == expected, format!("{partition:?}"));
    push("form", alg.contains(&rep.matrix), String::new());
    let c = centralizer_dim(&alg, &rep.matrix);
    push("centralizer", c == alg.rank() + 2, c.to_string());
    let dense = dense_orbit_check(&alg, alpha, &rep.matrix)?;
    push(
        "dense",
        dense.dense,
        format!("{} of {}", dense.tangent_dim, dense.u_alpha_dim),
    );
    let target = alg.root_system.simple_root(alpha);
    push("support", !rep.support.contains(&target), String::new());

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { checks, passed })
}

/// Every covered representative of rank at most `max_rank`, and the
/// finite-field orbit counts for `sl_3`, `so_5` and `sl_4`.
pub fn verify_all(max_rank: usize) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    for family in Family::ALL {
        for n in family.min_n().. {
            let alg = build_algebra(family, n)?;
            if alg.rank() > max_rank {
                break;
            }
            for alpha in covered_alphas(family, n) {
                checks.extend(verify_rep(family, n, alpha)?.checks);
            }
        }
    }

    for (family, n, expected) in [(Family::Sl, 3, 3), (Family::SoOdd, 2, 3), (Family::Sl, 4, 5)] {
        let alg = build_algebra(family, n)?;
        let filter = family.subregular_partition(n);
        for q in [3, 5] {
            let c = fforacle::enumerate_b_orbits(&alg, q, Subspace::Nilradical, Some(&filter))?;
            checks.push(Check {
                name: format!("{family}{n} q={q}: subregular orbits in u"),
                passed: c.orbit_count == expected,
                detail: c.orbit_count.to_string(),
            });
        }
    }
    for n in [3, 4] {
        let alg = build_algebra(Family::Sl, n)?;
        let rep = subregular_rep(&alg, 1)?;
        let orbit = fforacle::orbit_of(&alg, 3, &rep.matrix)?;
        let predicate = fforacle::ble_point_set(&alg, 3)?;
        checks.push(Check {
            name: format!("sl{n} q=3: orbit of the a1 representative"),
            passed: orbit == predicate,
            detail: format!("{} points", orbit.len()),
        });
    }

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerifyReport { checks, passed })
}

// Table and JSON renderings behind one object-safe trait.
mod erased {
    use super::*;

    pub trait Render {
        fn json(&self) -> String;
        fn table(&self) -> String;
    }

    impl Render for RootsReport {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = format!("{}: {} positive roots\n", self.cartan_type, self.positive_roots.len());
            s.push_str("cartan matrix\n");
            for row in &self.cartan {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                let _ = writeln!(s, "{}", cells.join(""));
            }
            let _ = writeln!(s, "highest root {}", self.highest_root);
            s
        }
    }

    impl Render for ClassifyReport<FibreRow> {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = format!("{}\nalpha  verdict   coefficient\n", self.cartan_type);
            for r in &self.rows {
                let _ = writeln!(s, "a{:<5} {:<9} {}", r.alpha, r.verdict, r.reason);
            }
            s
        }
    }

    impl Render for ClassifyReport<OrbitalRow> {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = format!("{}\nalpha  verdict   witness\n", self.cartan_type);
            for r in &self.rows {
                let w = match &r.witness {
                    Witness::Ideal(g) => {
                        let g: Vec<String> = g.iter().map(|a| format!("a{a}")).collect();
                        format!("ideal generated by {}", g.join(","))
                    }
                    Witness::Literature(tag) => serde_json::to_value(tag)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default(),
                };
                let _ = writeln!(s, "a{:<5} {:<9} {}", r.alpha, r.verdict, w);
            }
            s
        }
    }

    impl Render for ClassifyReport<BorbitRow> {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = format!("{}\nalpha  B-orbits\n", self.cartan_type);
            for r in &self.rows {
                let _ = writeln!(s, "a{:<5} {}", r.alpha, r.orbit_count);
            }
            s
        }
    }

    impl Render for IdealReport {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let gens: Vec<String> = self.generators.iter().map(|a| format!("a{a}")).collect();
            format!(
                "{} ideal <{}>\ndim n = {}, dim [n,n] = {}, dim n/[n,n] = {}, dim B/N = {}\ninfinitely many B-orbits forced: {}\n",
                self.cartan_type,
                gens.join(","),
                self.stats.dim_n,
                self.stats.dim_derived,
                self.stats.dim_abelianization,
                self.stats.dim_b_mod_n,
                self.infinite
            )
        }
    }

    impl Render for Vec<crate::ideals::TableRow> {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = String::from("type  generators  dim B/N  dim n/[n,n]\n");
            for r in self {
                let gens: Vec<String> = r.generators.iter().map(|a| format!("a{a}")).collect();
                let _ = writeln!(
                    s,
                    "{:<5} {:<11} {:<8} {}",
                    r.cartan_type.to_string(),
                    gens.join(","),
                    r.dim_b_mod_n,
                    r.dim_abelianization
                );
            }
            s
        }
    }

    impl Render for VerifyReport {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let mut s = String::new();
            for c in &self.checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() {
                    let _ = writeln!(s, "{mark} {}", c.name);
                } else {
                    let _ = writeln!(s, "{mark} {} ({})", c.name, c.detail);
                }
            }
            let failed = self.checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(s, "{} checks, {failed} failed", self.checks.len());
            s
        }
    }

    impl Render for OrbitCensusFF {
        fn json(&self) -> String {
            json(self)
        }
        fn table(&self) -> String {
            let filter = match &self.filter {
                Some(p) => format!("{p:?}"),
                None => "none".into(),
            };
            let sizes: Vec<String> = self.orbit_sizes.iter().map(|s| s.to_string()).collect();
            format!(
                "{}{} over F_{} on {} (partition filter {})\n{} points, {} orbits\nsizes {}\n",
                self.family,
                self.n,
                self.q,
                self.subspace,
                filter,
                self.point_count,
                self.orbit_count,
                sizes.join(" ")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &str) -> Outcome {
        run(std::iter::once("subreg").chain(args.split_whitespace()))
    }

    #[test]
    fn orbital_table() {
        let out = call("classify orbital --type A --rank 5");
        assert_eq!(out.code, 0);
        let finite: Vec<&str> = out.stdout.lines().filter(|l| l.contains(" finite")).collect();
        assert_eq!(finite.len(), 3);
        assert!(out.stdout.contains("a2     infinite"));
    }

    #[test]
    fn census_total() {
        let out = call("census fibre --type B --rank 4");
        assert_eq!(out.code, 0);
        assert!(out.stdout.ends_with("total 7\n"));
    }

    #[test]
    fn ideals_table_rows() {
        let out = call("ideals table --format json");
        let rows: Vec<crate::ideals::TableRow> = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(rows.len(), 5);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call("roots --type H --rank 3").code, 2);
        assert_eq!(call("roots --type E --rank 9").code, 2);
        assert_eq!(call("ff enumerate --family sl --n 3 --q 4").code, 2);
        assert_eq!(call("roots --type A --rank 3 --format dot").code, 2);
        assert_eq!(call("curve --type A --rank 3 --format dot").code, 0);
    }

    #[test]
    fn verify_rep_passes() {
        let out = call("verify rep --family sp --n 3 --alpha 3");
        assert_eq!(out.code, 0, "{}", out.stdout);
    }
}
