//! Turns `--family` and its parameters into graphs.

use anyhow::{Context, Result};
use ddglab::constructions::*;
use ddglab::switching::construction5;
use ddglab::{DdgParams, Graph};
use serde::Serialize;

use crate::{io, Family, FamilyArgs, UsageError};

/// One generated graph with what theory predicts about it.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub entry: SidecarEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SidecarEntry {
    pub family: String,
    pub vertices: usize,
    /// Parameters the construction predicts; absent for non-DDG families.
    pub predicted: Option<DdgParams>,
    pub srg: Option<SrgParams>,
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: Family) -> Result<T> {
    value.ok_or_else(|| UsageError(format!("--family {} requires --{flag}", family_name(family))).into())
}

pub fn family_name(f: Family) -> String {
    use clap::ValueEnum;
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn built(name: String, b: BuiltDdg) -> Generated {
    let entry = SidecarEntry { family: name, vertices: b.graph.n(), predicted: Some(b.params), srg: None };
    Generated { graph: b.graph, entry }
}

fn plain(name: String, g: Graph) -> Generated {
    let entry = SidecarEntry { family: name, vertices: g.n(), predicted: None, srg: srg_parameters(&g) };
    Generated { graph: g, entry }
}

/// The base graph for constructions that take one: `--srg NAME` or the first graph of `--in`.
fn base_graph(args: &FamilyArgs) -> Result<(String, Graph)> {
    match (&args.srg, &args.input) {
        (Some(name), None) => Ok((name.clone(), srg_by_name(name)?)),
        (None, Some(path)) => {
            let (_, g) = io::read_graphs(Some(path))?.into_iter().next().context("input has no graphs")?;
            Ok((path.display().to_string(), g))
        }
        _ => {
            Err(UsageError(format!("--family {} requires exactly one of --srg or --in", family_name(args.family)))
                .into())
        }
    }
}

fn design(args: &FamilyArgs) -> Result<Design> {
    let path = args.design.as_deref().ok_or_else(|| UsageError("--family construction1 requires --design".into()))?;
    if path.as_os_str() == "fano" {
        return Ok(Design::fano());
    }
    Ok(Design::parse(&io::read_text(Some(path))?)?)
}

/// `m` copies of a perfect matching on `n` vertices: the `k′ = 1` ingredient family.
fn matchings(m: usize, n: usize) -> Result<Vec<Graph>> {
    if !n.is_multiple_of(2) {
        return Err(UsageError(format!("matching ingredients need even --n, got {n}")).into());
    }
    let g = Graph::from_edges(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1)))?;
    Ok(vec![g; m])
}

pub fn generate(args: &FamilyArgs) -> Result<Vec<Generated>> {
    let f = args.family;
    let name = family_name(f);
    Ok(match f {
        Family::Gamma | Family::Gamma1 | Family::Gamma2 => {
            let t = need(args.t, "t", f)?;
            let fam = gamma_family(t)?;
            let b = match f {
                Family::Gamma => fam.gamma,
                Family::Gamma1 => fam.gamma1,
                _ => fam.gamma2,
            };
            vec![built(format!("{name}(t={t})"), b)]
        }
        Family::Construction1 => vec![built(name, construction1(&design(args)?)?)],
        Family::Construction2 => {
            let n = need(args.n, "n", f)?;
            let (base, g) = base_graph(args)?;
            vec![built(format!("{name}({base}, n={n})"), construction2(&g, n)?)]
        }
        Family::Construction3 => {
            let ingredients = match &args.input {
                Some(path) => io::read_graphs(Some(path))?.into_iter().map(|(_, g)| g).collect(),
                None => matchings(need(args.m, "m", f)?, need(args.n, "n", f)?)?,
            };
            vec![built(format!("{name}(m={})", ingredients.len()), construction3(&ingredients)?)]
        }
        Family::Construction4 => {
            let (base, g) = base_graph(args)?;
            vec![built(format!("{name}({base})"), construction4(&g)?)]
        }
        Family::Construction5 => {
            let (base, g) = base_graph(args)?;
            let c5 = construction5(&g)?;
            c5.outputs
                .into_iter()
                .enumerate()
                .map(|(i, o)| built(format!("{name}({base})#{i}"), BuiltDdg { graph: o.graph, params: o.params }))
                .collect()
        }
        Family::Construction6 => {
            let t = need(args.t, "t", f)?;
            vec![built(format!("{name}(H_{t})"), construction6(&hadamard_tower(t)?)?)]
        }
        Family::Paley => {
            let q = need(args.q, "q", f)?;
            vec![plain(format!("paley({q})"), paley(q)?)]
        }
        Family::Lattice => {
            let n = need(args.n, "n", f)?;
            vec![plain(format!("lattice({n})"), lattice(n)?)]
        }
        Family::LatticeComplement => {
            let n = need(args.n, "n", f)?;
            vec![plain(format!("lattice_complement({n})"), lattice_complement(n)?)]
        }
        Family::Triangular => {
            let n = need(args.n, "n", f)?;
            vec![plain(format!("triangular({n})"), triangular(n)?)]
        }
        Family::Petersen => vec![plain("petersen".into(), petersen())],
    })
}
