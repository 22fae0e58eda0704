//! Request handling behind the `epoly` binary.
//!
//! A [`CommandRequest`] names one computation and its inputs; [`run`] turns
//! it into an [`OutputRecord`], which renders as text, JSON or CSV.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use epoly::character::{character_table_with_bound, fixed_dims};
use epoly::confspace::{
    config_quotient, equivariant_config, orbit_equivariant, orbit_lambda_quotient, ordered_config,
    ordered_config_recursive, power_quotient, sym_product, unordered_config, OrbitSetup,
    VarietyClass,
};
use epoly::golden;
use epoly::oracle::{
    closed_points, count_ordered_config, count_sym, count_unordered_config, profile_from_epoly,
};
use epoly::partition::{partitions_of, Partition};
use epoly::poly::{BivarPoly, Monomial};
use epoly::repring::{dim_pairing, solve_plus_minus, trivial_coefficient};
use epoly::{EPoly, EquivariantPoly, Variety};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_MAX_N: usize = 10;

/// Depth of the oracle table when `--n` is not given.
pub const DEFAULT_ORACLE_N: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Config,
    Unordered,
    Sym,
    PowerQuotient,
    ConfigQuotient,
    Equivariant,
    Orbit,
    OrbitQuotient,
    Oracle,
    PaperTables,
    CharTable,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// E-polynomials of configuration spaces of points and orbits.
#[derive(Debug, Clone, PartialEq, Eq, Parser, Serialize, Deserialize)]
#[command(name = "epoly", version)]
pub struct CommandRequest {
    #[arg(value_enum)]
    pub command: Command,
    /// E-polynomial of the variety, or of the quotient X⫽G for orbit commands.
    #[arg(long, visible_alias = "quotient", allow_hyphen_values = true)]
    pub variety: Option<String>,
    /// E-polynomial of the group acting on the fibres.
    #[arg(long, allow_hyphen_values = true)]
    pub group: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Partition such as "3,1,1".
    #[arg(long)]
    pub lambda: Option<String>,
    /// Prime power field size for the oracle.
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest n accepted without opting in.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,
}

impl CommandRequest {
    pub fn new(command: Command) -> Self {
        CommandRequest {
            command,
            variety: None,
            group: None,
            n: None,
            lambda: None,
            q: None,
            format: Format::Text,
            max_n: DEFAULT_MAX_N,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] epoly::Error),
    #[error("missing required field --{field} for `{command}`")]
    MissingField {
        command: &'static str,
        field: &'static str,
    },
    #[error("n = {n} exceeds --max-n {max_n}")]
    Bound { n: usize, max_n: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    /// 3 parse, 4 bound, 5 missing field, 6 anything else. Clap's own usage
    /// errors exit with 2 and a MISMATCH outcome with 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(epoly::Error::Parse { .. }) => 3,
            CliError::Core(epoly::Error::BoundExceeded { .. }) | CliError::Bound { .. } => 4,
            CliError::MissingField { .. } => 5,
            _ => 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Whether any row carries the flag `MISMATCH`.
    pub fn has_mismatch(&self) -> bool {
        self.column("flag")
            .is_some_and(|i| self.rows.iter().any(|r| r[i] == "MISMATCH"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CommandResult {
    Poly(String),
    /// Partition keys in canonical order.
    Map(Vec<(String, String)>),
    Table(Table),
}

impl Serialize for CommandResult {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{SerializeMap, SerializeSeq};
        match self {
            CommandResult::Poly(p) => s.serialize_str(p),
            CommandResult::Map(entries) => {
                let mut map = s.serialize_map(Some(entries.len()))?;
                for (k, v) in entries {
                    map.serialize_entry(k, v)?;
                }
                map.end()
            }
            CommandResult::Table(table) => {
                let mut seq = s.serialize_seq(Some(table.rows.len()))?;
                for row in &table.rows {
                    let record: serde_json::Map<String, serde_json::Value> = table
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().cloned().map(serde_json::Value::String))
                        .collect();
                    seq.serialize_element(&record)?;
                }
                seq.end()
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub request: CommandRequest,
    pub result: CommandResult,
    pub ms: u64,
}

impl OutputRecord {
    pub fn has_mismatch(&self) -> bool {
        matches!(&self.result, CommandResult::Table(t) if t.has_mismatch())
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.render_text()),
            Format::Json => serde_json::to_string_pretty(self)
                .map(|s| s + "\n")
                .map_err(|e| CliError::Output(e.to_string())),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        match &self.result {
            CommandResult::Poly(p) => format!("{p}\n"),
            CommandResult::Map(entries) => {
                let width = entries
                    .iter()
                    .map(|(k, _)| k.chars().count())
                    .max()
                    .unwrap_or(0);
                entries
                    .iter()
                    .map(|(k, v)| format!("{k:>width$}: {v}\n"))
                    .collect()
            }
            CommandResult::Table(table) => {
                let mut widths: Vec<usize> =
                    table.columns.iter().map(|c| c.chars().count()).collect();
                for row in &table.rows {
                    for (w, cell) in widths.iter_mut().zip(row) {
                        *w = (*w).max(cell.chars().count());
                    }
                }
                let line = |cells: &[String]| {
                    let padded: Vec<String> = cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:<w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string() + "\n"
                };
                let mut out = line(&table.columns);
                for row in &table.rows {
                    out += &line(row);
                }
                out
            }
        }
    }

    fn render_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| CliError::Output(e.to_string());
        match &self.result {
            CommandResult::Poly(p) => {
                w.write_record(["result"]).map_err(err)?;
                w.write_record([p]).map_err(err)?;
            }
            CommandResult::Map(entries) => {
                w.write_record(["lambda", "coefficient"]).map_err(err)?;
                for (k, v) in entries {
                    w.write_record([k, v]).map_err(err)?;
                }
            }
            CommandResult::Table(table) => {
                w.write_record(&table.columns).map_err(err)?;
                for row in &table.rows {
                    w.write_record(row).map_err(err)?;
                }
            }
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Output(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
    }
}

pub fn run(request: &CommandRequest) -> Result<OutputRecord, CliError> {
    let start = Instant::now();
    let result = dispatch(request)?;
    Ok(OutputRecord {
        request: request.clone(),
        result,
        ms: start.elapsed().as_millis() as u64,
    })
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Config => "config",
        Command::Unordered => "unordered",
        Command::Sym => "sym",
        Command::PowerQuotient => "power-quotient",
        Command::ConfigQuotient => "config-quotient",
        Command::Equivariant => "equivariant",
        Command::Orbit => "orbit",
        Command::OrbitQuotient => "orbit-quotient",
        Command::Oracle => "oracle",
        Command::PaperTables => "paper-tables",
        Command::CharTable => "char-table",
    }
}

struct Fields<'a>(&'a CommandRequest);

impl Fields<'_> {
    fn missing(&self, field: &'static str) -> CliError {
        CliError::MissingField {
            command: command_name(self.0.command),
            field,
        }
    }

    fn variety(&self) -> Result<Variety, CliError> {
        let text = self
            .0
            .variety
            .as_deref()
            .ok_or_else(|| self.missing("variety"))?;
        Ok(VarietyClass::new(text.parse()?, text))
    }

    fn orbit_setup(&self) -> Result<OrbitSetup<BigInt>, CliError> {
        let quotient = self.variety()?;
        let text = self
            .0
            .group
            .as_deref()
            .ok_or_else(|| self.missing("group"))?;
        Ok(OrbitSetup::new(
            quotient,
            VarietyClass::new(text.parse()?, text),
        ))
    }

    fn bounded(&self, n: usize) -> Result<usize, CliError> {
        if n > self.0.max_n {
            return Err(CliError::Bound {
                n,
                max_n: self.0.max_n,
            });
        }
        Ok(n)
    }

    fn n(&self) -> Result<usize, CliError> {
        self.bounded(self.0.n.ok_or_else(|| self.missing("n"))?)
    }

    /// The partition, checked against `--n` when both are given.
    fn lambda(&self) -> Result<Partition, CliError> {
        let text = self
            .0
            .lambda
            .as_deref()
            .ok_or_else(|| self.missing("lambda"))?;
        let lambda: Partition = text.parse()?;
        if let Some(n) = self.0.n {
            if n != lambda.n() {
                return Err(epoly::Error::SizeMismatch {
                    expected: n,
                    found: lambda.n(),
                }
                .into());
            }
        }
        self.bounded(lambda.n())?;
        Ok(lambda)
    }
}

fn poly_result(p: EPoly) -> CommandResult {
    CommandResult::Poly(p.to_string())
}

fn map_result(e: &EquivariantPoly) -> CommandResult {
    CommandResult::Map(
        e.iter()
            .map(|(l, p)| (l.to_string(), p.to_string()))
            .collect(),
    )
}

fn dispatch(request: &CommandRequest) -> Result<CommandResult, CliError> {
    let f = Fields(request);
    Ok(match request.command {
        Command::Config => poly_result(ordered_config(&f.variety()?, f.n()?)),
        Command::Unordered => poly_result(unordered_config(&f.variety()?, f.n()?)),
        Command::Sym => poly_result(sym_product(&f.variety()?, f.n()?)),
        Command::PowerQuotient => poly_result(power_quotient(&f.variety()?, &f.lambda()?)),
        Command::ConfigQuotient => poly_result(config_quotient(&f.variety()?, &f.lambda()?)),
        Command::Equivariant => map_result(&equivariant_config(&f.variety()?, f.n()?)?),
        Command::Orbit => map_result(&orbit_equivariant(&f.orbit_setup()?, f.n()?)?),
        Command::OrbitQuotient => {
            poly_result(orbit_lambda_quotient(&f.orbit_setup()?, &f.lambda()?)?)
        }
        Command::Oracle => {
            let x = f.variety()?;
            let q = request.q.ok_or_else(|| f.missing("q"))?;
            let n = f.bounded(request.n.unwrap_or(DEFAULT_ORACLE_N))?;
            CommandResult::Table(oracle_table(&x, q, n)?)
        }
        Command::PaperTables => CommandResult::Table(paper_tables()?),
        Command::CharTable => {
            let n = f.n()?;
            CommandResult::Table(char_table(n, request.max_n)?)
        }
    })
}

fn flag(ok: bool) -> String {
    if ok { "MATCH" } else { "MISMATCH" }.to_string()
}

fn oracle_table(x: &Variety, q: u64, n: usize) -> Result<Table, CliError> {
    if n == 0 {
        return Err(CliError::Invalid("the oracle needs n ≥ 1".into()));
    }
    let profile = profile_from_epoly(&x.epoly, q, n)?;
    let cp = closed_points(&profile)?;
    let at = |p: EPoly| p.eval_balanced(&BigInt::from(q));
    let mut table = Table::new(&[
        "n",
        "sym",
        "sym_count",
        "unordered",
        "unordered_count",
        "ordered",
        "ordered_count",
        "flag",
    ]);
    for m in 1..=n {
        let values = [
            at(sym_product(x, m))?,
            at(unordered_config(x, m))?,
            at(ordered_config(x, m))?,
        ];
        let counts = [
            count_sym(&cp, m)?,
            count_unordered_config(&cp, m)?,
            count_ordered_config(&profile, m),
        ];
        let ok = values == counts;
        let mut row = vec![m.to_string()];
        for (v, c) in values.iter().zip(&counts) {
            row.push(v.to_string());
            row.push(c.to_string());
        }
        row.push(flag(ok));
        table.push(row);
    }
    Ok(table)
}

fn char_table(n: usize, max_n: usize) -> Result<Table, CliError> {
    let t = character_table_with_bound(n, max_n.max(n))?;
    let mut columns = vec!["lambda".to_string()];
    columns.extend(t.order().iter().map(|mu| format!("({mu})")));
    let rows = t
        .order()
        .iter()
        .zip(t.values())
        .map(|(lambda, values)| {
            std::iter::once(lambda.to_string())
                .chain(values.iter().map(i64::to_string))
                .collect()
        })
        .collect();
    Ok(Table { columns, rows })
}

fn vector_string(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn matrix_string(m: &[Vec<i64>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| vector_string(r)).collect();
    format!("[{}]", rows.join(", "))
}

/// Every reference table recomputed and flagged against the embedded values.
pub fn paper_tables() -> Result<Table, CliError> {
    let mut table = Table::new(&["table", "key", "computed", "reference", "flag"]);
    let mut row = |name: &str, key: String, computed: String, reference: String, f: String| {
        table.push(vec![name.to_string(), key, computed, reference, f]);
    };

    let ordered = golden::pgl2_ordered();
    let pgl2: Variety = VarietyClass::new(ordered.variety.parse()?, "PGL2");
    for r in &ordered.rows {
        let want: EPoly = r.value.parse()?;
        let got = ordered_config(&pgl2, r.n);
        let ok = got == want;
        row(
            "pgl2-ordered",
            format!("n={}", r.n),
            got.to_string(),
            want.to_string(),
            flag(ok),
        );
        let rec = ordered_config_recursive(&pgl2, r.n);
        let ok = rec == want;
        row(
            "pgl2-ordered-recursive",
            format!("n={}", r.n),
            rec.to_string(),
            want.to_string(),
            flag(ok),
        );
    }

    let unordered = golden::pgl2_unordered();
    let x: Variety = VarietyClass::new(unordered.variety.parse()?, "PGL2");
    for r in &unordered.rows {
        let want: EPoly = r.value.parse()?;
        let got = unordered_config(&x, r.n);
        let ok = got == want;
        row(
            "pgl2-unordered",
            format!("n={}", r.n),
            got.to_string(),
            want.to_string(),
            flag(ok),
        );
    }

    for formula in golden::plus_minus().formulas {
        let n = formula.n;
        let parts = partitions_of(n);
        // u^i stands for the quotient by the i-th Young subgroup
        let rhs: BTreeMap<Partition, EPoly> = parts
            .iter()
            .enumerate()
            .map(|(i, mu)| {
                (
                    mu.clone(),
                    BivarPoly::monomial(BigInt::from(1), Monomial::new(i as u32, 0)),
                )
            })
            .collect();
        let solved = solve_plus_minus(n, &rhs)?;
        for (lambda, want) in formula.coefficients() {
            let entry = solved.get(&lambda);
            let got: Vec<i64> = (0..parts.len())
                .map(|i| i64::try_from(entry.coeff(Monomial::new(i as u32, 0))).unwrap_or(i64::MAX))
                .collect();
            let ok = got == want;
            row(
                "plus-minus",
                format!("n={n} {lambda}"),
                vector_string(&got),
                vector_string(&want),
                flag(ok),
            );
        }
    }

    for reference in golden::fixed_dim_tables().matrices {
        let fd = fixed_dims(reference.n)?;
        let ok = fd.dims() == reference.dims.as_slice();
        row(
            "fixed-dims",
            format!("n={}", reference.n),
            matrix_string(fd.dims()),
            matrix_string(&reference.dims),
            flag(ok),
        );
    }

    let orbits = golden::gl2_orbits();
    let setup = OrbitSetup::new(
        VarietyClass::new(orbits.quotient.parse()?, "PGL2"),
        VarietyClass::new(orbits.group.parse()?, "C*"),
    );
    for case in &orbits.cases {
        let n = case.n;
        let e = orbit_equivariant(&setup, n)?;
        let judge = |got: &EPoly, want: &str| -> Result<String, CliError> {
            let want: EPoly = want.parse()?;
            Ok(if case.disputed {
                "DISPUTED".to_string()
            } else {
                flag(*got == want)
            })
        };
        for (lambda, want) in case.coefficients() {
            let got = e.get(&lambda);
            let f = judge(&got, &want)?;
            row(
                "gl2-orbits",
                format!("n={n} {lambda}"),
                got.to_string(),
                want,
                f,
            );
        }
        let pairing = dim_pairing(&e)?;
        let f = judge(&pairing, &case.dim_pairing)?;
        row(
            "gl2-orbits",
            format!("n={n} dim"),
            pairing.to_string(),
            case.dim_pairing.clone(),
            f,
        );
        let quotient = trivial_coefficient(&e);
        let f = judge(&quotient, &case.quotient_by_sn)?;
        row(
            "gl2-orbits",
            format!("n={n} quotient"),
            quotient.to_string(),
            case.quotient_by_sn.clone(),
            f,
        );
        if let Some(derived) = &case.derived_quotient_by_sn {
            let want: EPoly = derived.parse()?;
            let ok = quotient == want;
            row(
                "gl2-orbits",
                format!("n={n} quotient (derived)"),
                quotient.to_string(),
                want.to_string(),
                flag(ok),
            );
        }
    }
    Ok(table)
}
