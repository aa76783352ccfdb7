//! `gen`, `verify`, `kappa` and `switch`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use ddglab::analysis::{analyze_reading, DdgReport};
use ddglab::connectivity::{vertex_connectivity, vertex_connectivity_bruteforce, KappaReport, Method};
use ddglab::constructions::{srg_by_name, srg_parameters, SrgParams};
use ddglab::graph::graph6_encode;
use ddglab::switching::construction5;
use ddglab::{recognize_ddg, DdgParams, Graph, Recognition};
use rayon::prelude::*;
use serde::Serialize;

use crate::families::{generate, SidecarEntry};
use crate::{io, Format, GenArgs, KappaArgs, SwitchArgs, UsageError, VerifyArgs};

/// Sidecar: entries keyed by the 1-based graph6 line number.
type Sidecar = BTreeMap<String, SidecarEntry>;

pub fn gen(args: &GenArgs) -> Result<bool> {
    let graphs = generate(&args.family)?;
    match args.format {
        Format::Graph6 => {
            let mut w = io::writer(args.out.as_deref())?;
            for g in &graphs {
                writeln!(w, "{}", graph6_encode(&g.graph))?;
            }
            w.flush()?;
            if let Some(out) = args.out.as_deref().filter(|p| p.as_os_str() != "-") {
                let sidecar: Sidecar =
                    graphs.iter().enumerate().map(|(i, g)| ((i + 1).to_string(), g.entry.clone())).collect();
                io::write_json(Some(&io::sidecar_path(out)), &sidecar)?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Item<'a> {
                line: usize,
                graph6: String,
                #[serde(flatten)]
                entry: &'a SidecarEntry,
            }
            let items: Vec<Item> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| Item { line: i + 1, graph6: graph6_encode(&g.graph), entry: &g.entry })
                .collect();
            io::write_json(args.out.as_deref(), &items)?;
        }
    }
    Ok(true)
}

#[derive(Debug, Serialize)]
struct VerifyItem {
    line: usize,
    vertices: usize,
    /// `proper`, `improper` or `not_ddg`.
    kind: &'static str,
    readings: Vec<DdgReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    improper: Option<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted: Option<DdgParams>,
    pass: bool,
}

fn load_sidecar(args: &VerifyArgs) -> Result<Option<Sidecar>> {
    let path = match (&args.sidecar, &args.input) {
        (Some(p), _) => p.clone(),
        (None, Some(input)) if input.as_os_str() != "-" => {
            let p = io::sidecar_path(input);
            if !p.exists() {
                return Ok(None);
            }
            p
        }
        _ => return Ok(None),
    };
    let text = io::read_text(Some(&path))?;
    Ok(Some(serde_json::from_str(&text).with_context(|| format!("bad sidecar {}", path.display()))?))
}

fn verify_one(line: usize, g: &Graph, predicted: Option<DdgParams>) -> Result<VerifyItem> {
    let rec = recognize_ddg(g)?;
    let readings = rec.readings().iter().map(|r| analyze_reading(g, r)).collect::<Result<Vec<_>, _>>()?;
    let (kind, improper) = match rec {
        Recognition::Proper { .. } => ("proper", None),
        Recognition::Improper { v, k, lambda } => ("improper", Some((v, k, lambda))),
        Recognition::NotDdg { .. } => ("not_ddg", None),
    };
    let matches = predicted.is_none_or(|p| readings.iter().any(|r| r.params == p));
    let pass = !readings.is_empty() && matches;
    Ok(VerifyItem { line, vertices: g.n(), kind, readings, improper, predicted, pass })
}

pub fn verify(args: &VerifyArgs) -> Result<bool> {
    let graphs = io::read_graphs(args.input.as_deref())?;
    let sidecar = load_sidecar(args)?;
    let items = graphs
        .par_iter()
        .map(|(line, g)| {
            let predicted = sidecar.as_ref().and_then(|s| s.get(&line.to_string())).and_then(|e| e.predicted);
            verify_one(*line, g, predicted).with_context(|| format!("line {line}"))
        })
        .collect::<Result<Vec<_>>>()?;
    io::write_json(args.out.as_deref(), &items)?;
    Ok(items.iter().all(|i| i.pass))
}

#[derive(Debug, Serialize)]
struct KappaItem {
    line: usize,
    vertices: usize,
    #[serde(flatten)]
    report: KappaReport,
    /// Exhaustive-search value, for graphs within `--brute-force-max`.
    #[serde(skip_serializing_if = "Option::is_none")]
    brute_force: Option<usize>,
    pass: bool,
}

pub fn kappa(args: &KappaArgs) -> Result<bool> {
    let graphs = io::read_graphs(args.input.as_deref())?;
    // Graphs are processed one at a time; each flow computation is already parallel.
    let mut items = Vec::with_capacity(graphs.len());
    for (line, g) in &graphs {
        let c = vertex_connectivity(g).with_context(|| format!("line {line}"))?;
        if let Some(cert) = c.certificate() {
            cert.verify(g).with_context(|| format!("line {line}: certificate"))?;
        }
        let brute_force = if g.n() <= args.brute_force_max.min(ddglab::connectivity::BRUTE_FORCE_MAX) {
            Some(vertex_connectivity_bruteforce(g)?)
        } else {
            None
        };
        let pass = brute_force.is_none_or(|b| b == c.kappa);
        items.push(KappaItem { line: *line, vertices: g.n(), report: c.report(Method::MaxFlow), brute_force, pass });
    }
    io::write_json(args.out.as_deref(), &items)?;
    Ok(items.iter().all(|i| i.pass))
}

#[derive(Debug, Serialize)]
struct SwitchedItem {
    line: usize,
    params: DdgParams,
    isomorphic_to_source: bool,
    /// Vertex pairs swapped by the Seidel automorphism.
    swapped: Vec<(usize, usize)>,
    kappa: usize,
}

#[derive(Debug, Serialize)]
struct SwitchReport {
    srg: Option<SrgParams>,
    source_params: DdgParams,
    seidel_automorphisms: usize,
    outputs: Vec<SwitchedItem>,
}

fn switch_source(args: &SwitchArgs) -> Result<Graph> {
    match (&args.srg, &args.input) {
        (Some(name), None) => Ok(srg_by_name(name)?),
        (None, Some(path)) => Ok(io::read_graphs(Some(path))?.into_iter().next().context("input has no graphs")?.1),
        _ => Err(UsageError("switch requires --srg or --in".into()).into()),
    }
}

pub fn switch(args: &SwitchArgs) -> Result<bool> {
    let srg = switch_source(args)?;
    let c5 = construction5(&srg)?;
    let mut outputs = Vec::new();
    for (i, o) in c5.outputs.iter().enumerate() {
        outputs.push(SwitchedItem {
            line: i + 1,
            params: o.params,
            isomorphic_to_source: o.isomorphic_to_source,
            swapped: o.sigma.moved_pairs(),
            kappa: vertex_connectivity(&o.graph)?.kappa,
        });
    }
    if let Some(out) = args.out.as_deref() {
        let mut w = io::writer(Some(out))?;
        for o in &c5.outputs {
            writeln!(w, "{}", graph6_encode(&o.graph))?;
        }
        w.flush()?;
    }
    let report = SwitchReport {
        srg: srg_parameters(&srg),
        source_params: c5.params,
        seidel_automorphisms: c5.seidel_count,
        outputs,
    };
    io::write_json(None::<&Path>, &report)?;
    Ok(true)
}
