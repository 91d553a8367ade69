//! Per-group computations and their text and JSON renderings.

use rayon::prelude::*;
use serde_json::{json, Value};

use splitcryst::assembly::{combine, hfin_in, KTheoryResult};
use splitcryst::catalog::{arithmetic_invariant, catalog, find, integral_representation, CrystGroup};
use splitcryst::cells::{cell_complex, describe, CellComplex};
use splitcryst::domain::{side_label, subdivide, verify_subproper, Domain};
use splitcryst::exact::{q_to_string, Vec3};
use splitcryst::kgroup::{FiniteKTable, KExpr};
use splitcryst::lines::{line_data, procedure_sound, LineData};
use splitcryst::Error;

/// Everything computed for one catalog group.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub group: CrystGroup,
    pub cells: CellComplex,
    pub hfin: (KExpr, KExpr, KExpr),
    pub lines: Vec<LineData>,
    pub k: KTheoryResult,
}

pub fn group_data(table: &FiniteKTable, cat: &[CrystGroup], label: &str) -> Result<GroupData, Error> {
    let g = find(cat, label)?;
    let cells = cell_complex(cat, label)?;
    let hfin = hfin_in(table, cat, label)?;
    let lines = line_data(cat, label)?;
    let k = combine(&g.label, hfin, &lines);
    Ok(GroupData { group: g.clone(), cells, hfin, lines, k })
}

/// All 73 groups in catalog order, computed in parallel.
pub fn compute_all(table: &FiniteKTable) -> Result<Vec<GroupData>, Error> {
    let cat = catalog()?;
    cat.par_iter().map(|g| group_data(table, &cat, &g.label)).collect()
}

fn vec3_json(v: &Vec3) -> Value {
    json!(v.to_strings())
}

pub fn ktheory_json(k: &KTheoryResult) -> Value {
    json!({
        "label": k.label,
        "K_minus1": k.k_minus1.to_string(),
        "K0_tilde": k.k0_tilde.to_string(),
        "Wh": k.wh.to_string(),
    })
}

pub fn catalog_json(cat: &[CrystGroup]) -> Value {
    Value::Array(
        cat.iter()
            .map(|g| {
                json!({
                    "label": g.label,
                    "lattice": g.lattice_index,
                    "point_group": g.name(),
                    "order": g.point_group.order(),
                    "maximal": g.is_maximal(),
                })
            })
            .collect(),
    )
}

pub fn catalog_text(cat: &[CrystGroup]) -> String {
    let mut out = String::new();
    for g in cat {
        let mark = if g.is_maximal() { "  (maximal)" } else { "" };
        out += &format!("{:<14} L{}  |H| = {:>2}{mark}\n", g.label, g.lattice_index, g.point_group.order());
    }
    out += &format!("{} groups\n", cat.len());
    out
}

pub fn classify_json(g: &CrystGroup) -> Result<Value, Error> {
    let rep = integral_representation(g)?;
    let inv = arithmetic_invariant(g)?;
    let basis: Vec<Value> = g.lattice.basis.iter().map(vec3_json).collect();
    Ok(json!({
        "label": g.label,
        "lattice": g.lattice_index,
        "basis": basis,
        "point_group": g.name(),
        "order": g.point_group.order(),
        "iso_type": inv.iso.to_string(),
        "contains_minus_one": inv.minus_one,
        "coinvariants": {
            "free_rank": inv.coinvariants.0,
            "torsion": inv.coinvariants.1.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        },
        "integral_representation": rep.matrices,
    }))
}

pub fn classify_text(g: &CrystGroup) -> Result<String, Error> {
    let rep = integral_representation(g)?;
    let inv = arithmetic_invariant(g)?;
    let mut out = format!("{}: point group {} on lattice L{}\n", g.label, g.name(), g.lattice_index);
    for (i, b) in g.lattice.basis.iter().enumerate() {
        out += &format!("  b{} = {b}\n", i + 1);
    }
    out += &format!("  |H| = {}, H = {}, -1 in H: {}\n", g.point_group.order(), inv.iso, inv.minus_one);
    let mut parts = vec![format!("Z^{}", inv.coinvariants.0)];
    parts.extend(inv.coinvariants.1.iter().map(|d| format!("Z/{d}")));
    out += &format!("  coinvariants: {}\n", parts.join(" "));
    out += "  integral representation:\n";
    for m in &rep.matrices {
        out += &format!("    {:?}\n", m);
    }
    Ok(out)
}

pub fn domain_json(d: &Domain) -> Result<Value, Error> {
    let report = verify_subproper(d)?;
    let sub = subdivide(d)?;
    let sides: Vec<Value> = d
        .sides
        .iter()
        .enumerate()
        .map(|(i, s)| json!({"side": side_label(i), "normal": vec3_json(&s.normal), "offset": q_to_string(&s.offset)}))
        .collect();
    let pairings: Vec<Value> = d
        .pairings
        .iter()
        .map(|p| json!({"side": side_label(p.side), "partner": side_label(p.partner), "map": p.map.to_string()}))
        .collect();
    let cycles: Vec<Value> = report
        .cycles
        .iter()
        .map(|c| {
            json!({
                "ridges": c.ridges.iter().map(|&(a, b)| format!("{}/{}", side_label(a), side_label(b))).collect::<Vec<_>>(),
                "kind": if c.dihedral { "dihedral" } else { "cyclic" },
                "sum": c.sum.to_string(),
                "k": c.k,
            })
        })
        .collect();
    Ok(json!({
        "index": d.index,
        "sides": sides,
        "pairings": pairings,
        "vertices": d.vertices().iter().map(vec3_json).collect::<Vec<_>>(),
        "cycles": cycles,
        "subproper": true,
        "bad_sides": sub.bad_sides.iter().map(|b| json!({"side": side_label(b.side), "from": vec3_json(&b.segment.0), "to": vec3_json(&b.segment.1)})).collect::<Vec<_>>(),
        "bad_ridges": sub.bad_ridges.iter().map(|r| json!({"from": vec3_json(&r.a), "to": vec3_json(&r.b)})).collect::<Vec<_>>(),
        "new_vertices": sub.new_vertices.iter().map(vec3_json).collect::<Vec<_>>(),
    }))
}

pub fn domain_text(d: &Domain) -> Result<String, Error> {
    let report = verify_subproper(d)?;
    let sub = subdivide(d)?;
    let mut out = format!("Fundamental polyhedron for Gamma_{}\n", d.index);
    for (i, s) in d.sides.iter().enumerate() {
        out += &format!("  {:<4} {} . x <= {}\n", side_label(i), s.normal, s.offset);
    }
    out += "side pairings:\n";
    for p in &d.pairings {
        out += &format!("  {} -> {}: {}\n", side_label(p.partner), side_label(p.side), p.map);
    }
    out += &format!("{} vertices\n", d.vertices().len());
    out += "ridge cycles:\n";
    for c in &report.cycles {
        let names: Vec<String> =
            c.ridges.iter().map(|&(a, b)| format!("{}/{}", side_label(a), side_label(b))).collect();
        let kind = if c.dihedral { "dihedral" } else { "cyclic" };
        out += &format!("  {:<8} sum {:<20} k = {}  [{}]\n", kind, c.sum.to_string(), c.k, names.join(" "));
    }
    out += "subproper: yes\n";
    for b in &sub.bad_sides {
        out += &format!("bad side {}: {} - {}\n", side_label(b.side), b.segment.0, b.segment.1);
    }
    for r in &sub.bad_ridges {
        out += &format!("bad ridge: {} - {}\n", r.a, r.b);
    }
    if !sub.new_vertices.is_empty() {
        let v: Vec<String> = sub.new_vertices.iter().map(|p| p.to_string()).collect();
        out += &format!("new vertices: {}\n", v.join(", "));
    }
    Ok(out)
}

pub fn stabilizers_json(d: &GroupData) -> Value {
    let cells: Vec<Value> = d
        .cells
        .cells
        .iter()
        .map(|c| {
            json!({
                "dim": c.dim,
                "point": vec3_json(&c.point),
                "stabilizer": c.stabilizer_name(),
                "iso_type": c.iso.to_string(),
            })
        })
        .collect();
    json!({
        "label": d.group.label,
        "cells": cells,
        "H_minus1": d.hfin.0.to_string(),
        "H_0": d.hfin.1.to_string(),
        "H_1": d.hfin.2.to_string(),
    })
}

pub fn stabilizers_text(d: &GroupData) -> String {
    let mut out = format!("{}: non-negligible cells (edges starred at their midpoints)\n", d.group.label);
    if d.cells.cells.is_empty() {
        out += "  none\n";
    }
    for c in &d.cells.cells {
        out += &format!("  {:<40} {}\n", describe(c), c.iso);
    }
    out += &format!("H_-1 = {}; H_0 = {}; H_1 = {}\n", d.hfin.0, d.hfin.1, d.hfin.2);
    out
}

pub fn lines_json(g: &CrystGroup, lines: &[LineData]) -> Value {
    Value::Array(
        lines
            .iter()
            .map(|l| {
                json!({
                    "line": l.line.to_string(),
                    "strict_stabilizer": l.strict_name,
                    "C": q_to_string(&l.translation),
                    "gamma_T": l.gamma_t.to_string(),
                    "gamma_R": l.reflection.as_ref().map(|(r, _)| r.to_string()),
                    "D": l.reflection.as_ref().map(|(_, d)| q_to_string(d)),
                    "structure": l.structure.to_string(),
                    "type": l.vc.name(),
                    "sound": procedure_sound(g, l),
                })
            })
            .collect(),
    )
}

pub fn lines_text(g: &CrystGroup, lines: &[LineData]) -> String {
    let mut out = format!("{}: {} non-negligible line(s)\n", g.label, lines.len());
    for l in lines {
        let d = l.reflection.as_ref().map(|(_, d)| format!(" D = {}", q_to_string(d))).unwrap_or_default();
        out += &format!(
            "  {:<40} {:<7} C = {}{d}  {}\n",
            l.line.to_string(),
            l.strict_name,
            q_to_string(&l.translation),
            l.vc
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renderings() {
        let cat = catalog().unwrap();
        let d = group_data(&FiniteKTable::default(), &cat, "Gamma_6").unwrap();
        assert_eq!(ktheory_json(&d.k)["K_minus1"], "Z^2");
        let text = classify_text(find(&cat, "D4+_1").unwrap()).unwrap();
        assert!(text.contains("coinvariants: Z^0 Z/2 Z/2\n"));
        let text = classify_text(find(&cat, "D'_3_7").unwrap()).unwrap();
        assert!(text.contains("coinvariants: Z^1\n"));
        assert!(stabilizers_text(&d).ends_with("H_-1 = Z^2; H_0 = 0; H_1 = 0\n"));
        assert_eq!(lines_json(&d.group, &d.lines), json!([]));
        assert!(catalog_text(&cat).ends_with("73 groups\n"));
    }
}
