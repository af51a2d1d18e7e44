use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use hqarch::chainsim::{ends_exchanged, trace, trace_csv};
use hqarch::floorplan::reference::{logical_qubit_layout, reference_distances, register_layout};
use hqarch::floorplan::{lookup, Floorplan, LOGICAL_QUBIT, REGISTER};
use hqarch::numfmt::{fixed, trim_decimal};
use hqarch::qec::threshold_sweep_csv;
use hqarch::{
    builtin_catalog, chain_length, check_design_rules, export_svg, logical_error_rate, make_schedule, overhead,
    summarize, sweep_t_total, t_swap, t_total, transfer_report, ChainGeometry, ChainState, ModuleSpec, QecLevel,
    RegisterSummary, SvgOptions,
};

use crate::config::{Counts, RunConfig};
use crate::error::CliError;

/// Inter-dot distance of the reference communication table, nm.
pub const TABLE_D_ID_NM: f64 = 40.0;

/// Operations of the communication table with their tabulated chain lengths.
pub const TABLE2_ROWS: [(&str, u32); 4] = [
    ("Comm. 2 phys. qubits (min)", 12),
    ("Comm. 2 phys. qubits (max)", 138),
    ("Comm. 2 log. qubits (min)", 192),
    ("Comm. 2 log. qubits (max)", 311),
];

pub const TABLE1_HEADER: [&str; 6] = ["device", "width_um", "height_um", "area_um2", "data_qubits", "comm_qubits"];

/// Files written and lines for stdout.
#[derive(Debug, Default)]
pub struct Report {
    pub files: Vec<PathBuf>,
    pub lines: Vec<String>,
}

struct Out<'a> {
    dir: &'a Path,
    report: Report,
}

impl<'a> Out<'a> {
    fn new(dir: &'a Path) -> Result<Self, CliError> {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
        Ok(Self {
            dir,
            report: Report::default(),
        })
    }

    fn write(&mut self, name: &str, contents: &str) -> Result<(), CliError> {
        let path = self.dir.join(name);
        std::fs::write(&path, contents).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        self.report.files.push(path);
        Ok(())
    }

    fn line(&mut self, s: impl Into<String>) {
        self.report.lines.push(s.into());
    }
}

fn csv_string<I, R>(header: &[&str], rows: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::model(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn table1_csv() -> Result<String, CliError> {
    csv_string(
        &TABLE1_HEADER,
        builtin_catalog().iter().map(|m| {
            vec![
                m.name.clone(),
                m.width_um.to_string(),
                m.height_um.to_string(),
                m.area().to_string(),
                m.data_qubits.to_string(),
                m.comm_qubits.to_string(),
            ]
        }),
    )
}

/// Parses a `table1.csv` back into modules with the catalog's columns.
pub fn read_table1(text: &str) -> Result<Vec<ModuleSpec>, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != TABLE1_HEADER {
        return Err(CliError::Config(format!("unexpected table1 header {header:?}")));
    }
    let bad = |what: &str, v: &str| CliError::Config(format!("bad {what} `{v}` in table1"));
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let f = |i: usize| rec[i].parse::<f64>().map_err(|_| bad(TABLE1_HEADER[i], &rec[i]));
        let u = |i: usize| rec[i].parse::<u32>().map_err(|_| bad(TABLE1_HEADER[i], &rec[i]));
        out.push(ModuleSpec::new(&rec[0], f(1)?, f(2)?, u(4)?, u(5)?).with_area(f(3)?));
    }
    Ok(out)
}

struct Table2Row {
    operation: String,
    qubits: u32,
    distance_um: f64,
    time_ns: f64,
}

fn reference_table2(cfg: &RunConfig) -> Result<Vec<Table2Row>, CliError> {
    let d = reference_distances().map_err(CliError::model)?;
    let distances = [d.physical_min_um, d.physical_max_um, d.logical_min_um, d.logical_max_um];
    let ts = t_swap(&cfg.physics, TABLE_D_ID_NM);
    Ok(TABLE2_ROWS
        .iter()
        .zip(distances)
        .map(|(&(op, n), distance_um)| Table2Row {
            operation: op.to_string(),
            qubits: n,
            distance_um,
            time_ns: f64::from(n - 1) * ts,
        })
        .collect())
}

fn query_rows(cfg: &RunConfig) -> Result<Vec<Table2Row>, CliError> {
    cfg.geometry
        .iter()
        .map(|g| {
            let geom = ChainGeometry::from_um(g.d_dq_um, g.d_id_nm).map_err(|e| CliError::Config(e.to_string()))?;
            let qubits = chain_length(&geom).map_err(|e| CliError::Config(e.to_string()))?;
            Ok(Table2Row {
                operation: format!(
                    "Query d_dq={} um d_id={} nm",
                    trim_decimal(g.d_dq_um, 6),
                    trim_decimal(g.d_id_nm, 6)
                ),
                qubits,
                distance_um: g.d_dq_um,
                time_ns: t_total(&cfg.physics, &geom).map_err(|e| CliError::Config(e.to_string()))?,
            })
        })
        .collect()
}

fn register_summary(counts: Counts) -> Result<RegisterSummary, CliError> {
    let plan = Floorplan::single(lookup(REGISTER).expect("catalog")).map_err(CliError::model)?;
    let mut s = summarize(&plan, 8).map_err(CliError::model)?;
    if counts == Counts::Composed {
        let reg = register_layout().map_err(CliError::model)?;
        s.data_qubits = reg.plan.data_qubits();
        s.comm_qubits = reg.plan.comm_qubits();
    }
    Ok(s)
}

pub fn cmd_tables(cfg: &RunConfig, dir: &Path, strict: bool) -> Result<Report, CliError> {
    let mut out = Out::new(dir)?;
    let reference = reference_table2(cfg)?;
    let queries = query_rows(cfg)?;
    let fmt_row = |r: &Table2Row| {
        vec![
            r.operation.clone(),
            r.qubits.to_string(),
            trim_decimal(r.distance_um, 3),
            fixed(r.time_ns, 1),
        ]
    };
    let header2 = ["operation", "qubits", "distance_um", "time_ns"];

    // Hop counts implied by the chain model at each reference distance.
    let mut model_rows = Vec::new();
    let mut worst_delta = 0i64;
    for r in &reference {
        let geom = ChainGeometry::from_um(r.distance_um, TABLE_D_ID_NM).map_err(CliError::model)?;
        let n = chain_length(&geom).map_err(CliError::model)?;
        let delta = i64::from(n) - i64::from(r.qubits);
        worst_delta = worst_delta.max(delta.abs());
        let t = t_total(&cfg.physics, &geom).map_err(CliError::model)?;
        model_rows.push(vec![
            r.operation.clone(),
            trim_decimal(r.distance_um, 3),
            r.qubits.to_string(),
            n.to_string(),
            format!("{delta:+}"),
            fixed(r.time_ns, 1),
            fixed(t, 1),
        ]);
    }

    let lq_plan = Floorplan::single(lookup(LOGICAL_QUBIT).expect("catalog")).map_err(CliError::model)?;
    let lq = summarize(&lq_plan, 1).map_err(CliError::model)?;
    let reg = register_summary(cfg.tables.register_counts)?;
    let density_rows: Vec<Vec<String>> = [(LOGICAL_QUBIT, lq), (REGISTER, reg)]
        .iter()
        .map(|(name, s)| {
            vec![
                name.to_string(),
                fixed(s.total_area_um2, 3),
                s.logical_qubits.to_string(),
                s.data_qubits.to_string(),
                s.comm_qubits.to_string(),
                fixed(s.density_mqubit_per_cm2(), 1),
            ]
        })
        .collect();

    let q = &cfg.qec;
    let block = q.block.qubits();
    let mut overhead_rows = Vec::new();
    for k in 0..=q.k_max {
        let level = QecLevel::new(k, q.p_phys, q.c_inv_threshold).map_err(|e| CliError::Config(e.to_string()))?;
        let o = overhead(&level, &reg, q.area_exponent, q.time_exponent, block).map_err(CliError::model)?;
        let rate = logical_error_rate(&level);
        overhead_rows.push(vec![
            k.to_string(),
            block.to_string(),
            o.physical_qubits.to_string(),
            fixed(o.area_um2, 3),
            o.time_factor.to_string(),
            format!("{:e}", rate.value),
            rate.clamped.to_string(),
        ]);
    }

    if cfg.outputs.csv {
        out.write("table1.csv", &table1_csv()?)?;
        out.write(
            "table2.csv",
            &csv_string(&header2, reference.iter().chain(&queries).map(fmt_row))?,
        )?;
        out.write(
            "table2_model.csv",
            &csv_string(
                &[
                    "operation",
                    "distance_um",
                    "qubits_tabulated",
                    "qubits_model",
                    "hop_delta",
                    "time_ns_tabulated",
                    "time_ns_model",
                ],
                model_rows.clone(),
            )?,
        )?;
        out.write(
            "density.csv",
            &csv_string(
                &[
                    "plan",
                    "area_um2",
                    "logical_qubits",
                    "data_qubits",
                    "comm_qubits",
                    "density_mqubit_per_cm2",
                ],
                density_rows.clone(),
            )?,
        )?;
        out.write(
            "threshold.csv",
            &threshold_sweep_csv(&q.p_sweep, q.c_inv_threshold, q.k_max).map_err(|e| CliError::Config(e.to_string()))?,
        )?;
        out.write(
            "overhead.csv",
            &csv_string(
                &[
                    "k",
                    "block_size",
                    "physical_qubits",
                    "area_um2",
                    "time_factor",
                    "logical_error_rate",
                    "clamped",
                ],
                overhead_rows,
            )?,
        )?;
    }
    if cfg.outputs.table {
        let mut txt = String::from("Physical dimensions and composition\n\n");
        let _ = writeln!(txt, "{:<14} {:>14} {:>10} {:>12}", "Device", "Dimensions um", "Area um2", "Data/Comm");
        for m in builtin_catalog() {
            let dims = format!("{} x {}", m.width_um, m.height_um);
            let counts = format!("{}/{}", m.data_qubits, m.comm_qubits);
            let _ = writeln!(txt, "{:<14} {:>14} {:>10} {:>12}", m.name, dims, m.area(), counts);
        }
        let _ = writeln!(txt, "\nCommunication at d_id = {} nm\n", trim_decimal(TABLE_D_ID_NM, 3));
        let _ = writeln!(txt, "{:<28} {:>7} {:>12} {:>10}", "Operation", "Qubits", "Distance um", "Time ns");
        for r in reference.iter().chain(&queries) {
            let row = fmt_row(r);
            let _ = writeln!(txt, "{:<28} {:>7} {:>12} {:>10}", row[0], row[1], row[2], row[3]);
        }
        let _ = writeln!(
            txt,
            "\nDensity: {} Mqubit/cm2 over {} um2",
            fixed(reg.density_mqubit_per_cm2(), 1),
            fixed(reg.total_area_um2, 3)
        );
        out.write("tables.txt", &txt)?;
    }
    out.line(format!(
        "density {} Mqubit/cm2, largest hop delta {worst_delta}",
        fixed(reg.density_mqubit_per_cm2(), 1)
    ));
    if strict && worst_delta > 1 {
        return Err(CliError::SelfTest(format!(
            "chain model differs from the tabulated qubit count by {worst_delta} hops"
        )));
    }
    Ok(out.report)
}

pub fn cmd_sweep(cfg: &RunConfig, dir: &Path, strict: bool) -> Result<Report, CliError> {
    let mut out = Out::new(dir)?;
    let points = cfg.sweep.d_id_points()?;
    let mut long = Vec::new();
    let mut skipped = 0usize;
    let mut per_file = Vec::new();
    for &d_dq_um in &cfg.sweep.d_dq_um {
        let mut rows = Vec::new();
        for p in sweep_t_total(&cfg.physics, d_dq_um * 1000.0, &points) {
            match p.t_total_ns {
                Ok(t) => {
                    let (d, t) = (trim_decimal(p.d_id_nm, 6), fixed(t, 1));
                    long.push(vec![trim_decimal(d_dq_um, 6), d.clone(), t.clone()]);
                    rows.push(vec![d, t]);
                }
                Err(e) => {
                    skipped += 1;
                    eprintln!(
                        "warning: d_dq={} um d_id={} nm skipped: {e}",
                        trim_decimal(d_dq_um, 6),
                        trim_decimal(p.d_id_nm, 6)
                    );
                }
            }
        }
        per_file.push((format!("sweep_{}um.csv", trim_decimal(d_dq_um, 6)), rows));
    }
    if cfg.outputs.csv {
        for (name, rows) in per_file {
            out.write(&name, &csv_string(&["d_id_nm", "t_total_ns"], rows)?)?;
        }
        out.write("sweep.csv", &csv_string(&["d_dq_um", "d_id_nm", "t_total_ns"], long.clone())?)?;
    }
    out.line(format!("{} sweep points, {skipped} skipped", long.len()));
    if strict && skipped > 0 {
        return Err(CliError::SelfTest(format!("{skipped} sweep points have no valid chain")));
    }
    Ok(out.report)
}

pub fn cmd_simulate(cfg: &RunConfig, dir: &Path, _strict: bool) -> Result<Report, CliError> {
    let mut out = Out::new(dir)?;
    let mut lengths: Vec<usize> = cfg.simulate.chain_lengths.clone();
    if cfg.simulate.include_geometry {
        for g in &cfg.geometry {
            let geom = ChainGeometry::from_um(g.d_dq_um, g.d_id_nm).map_err(|e| CliError::Config(e.to_string()))?;
            lengths.push(chain_length(&geom).map_err(|e| CliError::Config(e.to_string()))? as usize);
        }
    }
    for &n in &lengths {
        if n < 2 || n % 2 != 0 {
            return Err(CliError::Config(format!("chain length must be even and at least 2, got {n}")));
        }
    }
    let mut summary = Vec::new();
    let mut failures = Vec::new();
    for (i, &n2) in lengths.iter().enumerate() {
        let start = ChainState::labeled(n2).map_err(|e| CliError::Config(e.to_string()))?;
        let sched = make_schedule(n2).map_err(|e| CliError::Config(e.to_string()))?;
        let states = trace(&start, &sched).map_err(CliError::model)?;
        let last = states.last().expect("trace holds the initial state");
        let mut sorted = last.payloads().to_vec();
        sorted.sort_unstable();
        let transferred = ends_exchanged(&start, last) && last.step() == n2 - 1 && sorted == start.payloads();
        if !transferred {
            failures.push(n2);
        }
        let report = transfer_report(n2, &cfg.physics, cfg.simulate.d_id_nm).map_err(CliError::model)?;
        let perm: Vec<String> = last.payloads().iter().map(u32::to_string).collect();
        summary.push(vec![
            i.to_string(),
            n2.to_string(),
            report.steps.to_string(),
            fixed(report.duration_ns, 1),
            transferred.to_string(),
            perm.join(" "),
        ]);
        out.line(format!("chain {n2}: steps={} transferred={transferred}", report.steps));
        if cfg.outputs.csv {
            out.write(&format!("trace_{i:02}_n{n2}.csv"), &trace_csv(&states))?;
        }
    }
    if cfg.outputs.csv {
        out.write(
            "simulate_summary.csv",
            &csv_string(
                &["index", "chain_qubits", "steps", "duration_ns", "transferred", "final_permutation"],
                summary,
            )?,
        )?;
    }
    if !failures.is_empty() {
        return Err(CliError::SelfTest(format!("end-exchange failed for chains {failures:?}")));
    }
    Ok(out.report)
}

/// The floorplan named by the layout section.
pub fn resolve_plan(cfg: &RunConfig) -> Result<Floorplan, CliError> {
    let name = cfg.layout.plan.as_str();
    let err = |e: &dyn std::fmt::Display| CliError::Config(format!("layout plan `{name}`: {e}"));
    match name {
        "custom" => {
            let doc = cfg
                .layout
                .custom
                .as_ref()
                .ok_or_else(|| CliError::Config("layout.plan is `custom` but layout.custom is missing".into()))?;
            doc.into_floorplan().map_err(|e| err(&e))
        }
        LOGICAL_QUBIT => Ok(logical_qubit_layout().map_err(|e| err(&e))?.plan),
        REGISTER => Ok(register_layout().map_err(|e| err(&e))?.plan),
        other => {
            let m = lookup(other).ok_or_else(|| CliError::Config(format!("unknown layout plan `{other}`")))?;
            Floorplan::single(m).map_err(|e| err(&e))
        }
    }
}

pub fn cmd_layout(cfg: &RunConfig, dir: &Path, strict: bool) -> Result<Report, CliError> {
    let plan = resolve_plan(cfg)?;
    let mut out = Out::new(dir)?;
    let rule = cfg.layout.min_feature_nm;
    let violations = check_design_rules(&plan, rule);
    let bb = plan.bounding_box();
    if cfg.outputs.svg {
        let opts = SvgOptions {
            px_per_um: cfg.layout.px_per_um,
            ..SvgOptions::default()
        };
        out.write("layout.svg", &export_svg(&plan, &opts))?;
    }
    let mut drc = String::new();
    let _ = writeln!(drc, "plan: {}", cfg.layout.plan);
    let _ = writeln!(drc, "placements: {}", plan.len());
    let _ = writeln!(
        drc,
        "bounding_box_um: {} x {}",
        trim_decimal(bb.width(), 6),
        trim_decimal(bb.height(), 6)
    );
    let _ = writeln!(drc, "min_feature_nm: {}", trim_decimal(rule, 6));
    let _ = writeln!(drc, "violations: {}", violations.len());
    for v in &violations {
        let _ = writeln!(drc, "  {v}");
    }
    let _ = writeln!(drc, "result: {}", if violations.is_empty() { "PASS" } else { "FAIL" });
    out.write("drc.txt", &drc)?;
    out.line(format!(
        "{}: {} placements, {} DRC violations",
        cfg.layout.plan,
        plan.len(),
        violations.len()
    ));
    if strict && !violations.is_empty() {
        return Err(CliError::SelfTest(format!("{} design-rule violations", violations.len())));
    }
    Ok(out.report)
}
