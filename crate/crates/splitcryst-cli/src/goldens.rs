//! Embedded reference tables and the regression runner that diffs a fresh
//! computation against them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use splitcryst::catalog::CrystGroup;
use splitcryst::cells::{identify, point_stabilizer, same_orbit, CellComplex};
use splitcryst::exact::Vec3;
use splitcryst::fingroup::FinGroupType;
use splitcryst::kgroup::{FiniteKTable, KExpr};
use splitcryst::lines::{cokernel, line_equivalence, strict_stabilizer, LineData, ParamLine, VcType};
use splitcryst::Error;

use crate::report::GroupData;

pub const CATALOG: &str = include_str!("../data/catalog.json");
pub const FINITE_K: &str = include_str!("../data/finite_k.json");
pub const CELLS: &str = include_str!("../data/cells.json");
pub const HFIN: &str = include_str!("../data/hfin.json");
pub const LINES: &str = include_str!("../data/lines.json");
pub const VC: &str = include_str!("../data/vc.json");
pub const COKERNELS: &str = include_str!("../data/cokernels.json");
pub const KTHEORY: &str = include_str!("../data/ktheory.json");

#[derive(Deserialize)]
struct CatalogFile {
    lattices: Vec<Vec<String>>,
}

#[derive(Deserialize)]
struct FiniteKRow {
    group: String,
    #[serde(rename = "K_-1")]
    k_minus1: String,
    #[serde(rename = "K0~")]
    k0: String,
    #[serde(rename = "Wh")]
    wh: String,
}

#[derive(Deserialize)]
struct Rows<T> {
    rows: T,
}

#[derive(Deserialize)]
struct CokernelRow {
    #[serde(rename = "type")]
    vc: String,
    #[serde(rename = "0")]
    k0: String,
    #[serde(rename = "1")]
    k1: String,
}

/// The embedded tables, parsed.
pub struct Goldens {
    pub catalog: Vec<Vec<String>>,
    pub finite_k: BTreeMap<(FinGroupType, i32), KExpr>,
    pub cells: BTreeMap<String, Vec<Vec<String>>>,
    pub hfin: BTreeMap<String, [KExpr; 2]>,
    pub lines: BTreeMap<String, Vec<[String; 2]>>,
    pub vc: BTreeMap<String, BTreeMap<String, usize>>,
    pub cokernels: BTreeMap<VcType, [KExpr; 2]>,
    pub ktheory: BTreeMap<String, [KExpr; 3]>,
}

fn parse_err(what: &str, e: impl std::fmt::Display) -> Error {
    Error::Procedure(format!("golden {what}: {e}"))
}

fn kexprs<const N: usize>(what: &str, v: [String; N]) -> Result<[KExpr; N], Error> {
    let mut out = [KExpr::ZERO; N];
    for (o, s) in out.iter_mut().zip(v.iter()) {
        *o = KExpr::parse(s).map_err(|e| parse_err(what, e))?;
    }
    Ok(out)
}

impl Goldens {
    pub fn embedded() -> Result<Self, Error> {
        Self::from_sources(&[CATALOG, FINITE_K, CELLS, HFIN, LINES, VC, COKERNELS, KTHEORY])
    }

    /// Parses the eight tables in the order of [`Goldens::embedded`].
    pub fn from_sources(src: &[&str; 8]) -> Result<Self, Error> {
        let catalog: CatalogFile = serde_json::from_str(src[0]).map_err(|e| parse_err("catalog", e))?;

        let fk: Rows<Vec<FiniteKRow>> = serde_json::from_str(src[1]).map_err(|e| parse_err("finite_k", e))?;
        let mut finite_k = BTreeMap::new();
        for r in fk.rows {
            let t = FinGroupType::from_name(&r.group).ok_or_else(|| parse_err("finite_k", &r.group))?;
            let [a, b, c] = kexprs("finite_k", [r.k_minus1, r.k0, r.wh])?;
            for (q, k) in [(-1, a), (0, b), (1, c)] {
                if !k.is_zero() {
                    finite_k.insert((t, q), k);
                }
            }
        }

        let cells: Rows<BTreeMap<String, Vec<Vec<String>>>> =
            serde_json::from_str(src[2]).map_err(|e| parse_err("cells", e))?;

        let hf: Rows<BTreeMap<String, [String; 2]>> = serde_json::from_str(src[3]).map_err(|e| parse_err("hfin", e))?;
        let hfin = hf.rows.into_iter().map(|(k, v)| Ok((k, kexprs("hfin", v)?))).collect::<Result<_, Error>>()?;

        let lines: Rows<BTreeMap<String, Vec<[String; 2]>>> =
            serde_json::from_str(src[4]).map_err(|e| parse_err("lines", e))?;
        let vc: Rows<BTreeMap<String, BTreeMap<String, usize>>> =
            serde_json::from_str(src[5]).map_err(|e| parse_err("vc", e))?;

        let ck: Rows<Vec<CokernelRow>> = serde_json::from_str(src[6]).map_err(|e| parse_err("cokernels", e))?;
        let mut cokernels = BTreeMap::new();
        for r in ck.rows {
            cokernels.insert(VcType::from_name(&r.vc)?, kexprs("cokernels", [r.k0, r.k1])?);
        }

        let kt: Rows<BTreeMap<String, [String; 3]>> =
            serde_json::from_str(src[7]).map_err(|e| parse_err("ktheory", e))?;
        let ktheory = kt.rows.into_iter().map(|(k, v)| Ok((k, kexprs("ktheory", v)?))).collect::<Result<_, Error>>()?;

        Ok(Goldens {
            catalog: catalog.lattices,
            finite_k,
            cells: cells.rows,
            hfin,
            lines: lines.rows,
            vc: vc.rows,
            cokernels,
            ktheory,
        })
    }
}

/// One diverging cell of one table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Mismatch {
    pub table: String,
    pub key: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GoldenReport {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl GoldenReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn check(&mut self, table: &str, key: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.checked += 1;
        let (e, a) = (expected.to_string(), actual.to_string());
        if e != a {
            self.mismatches.push(Mismatch { table: table.into(), key: key.into(), expected: e, actual: a });
        }
    }

    /// Mismatches of one table.
    pub fn in_table<'a>(&'a self, table: &'a str) -> impl Iterator<Item = &'a Mismatch> + 'a {
        self.mismatches.iter().filter(move |m| m.table == table)
    }
}

fn check_catalog(r: &mut GoldenReport, gold: &Goldens, data: &[GroupData]) {
    r.check("catalog", "groups", 73, data.len());
    for (i, names) in gold.catalog.iter().enumerate() {
        let want: BTreeSet<&str> = names.iter().map(String::as_str).collect();
        let have: BTreeSet<&str> =
            data.iter().filter(|d| d.group.lattice_index == i + 1).map(|d| d.group.name()).collect();
        let join = |s: &BTreeSet<&str>| s.iter().copied().collect::<Vec<_>>().join(", ");
        r.check("catalog", format!("L{}", i + 1), join(&want), join(&have));
    }
}

fn check_finite_k(r: &mut GoldenReport, gold: &Goldens, table: &FiniteKTable) {
    for t in FinGroupType::ALL {
        for (q, name) in [(-1, "K_-1"), (0, "K0~"), (1, "Wh")] {
            let want = gold.finite_k.get(&(t, q)).copied().unwrap_or(KExpr::ZERO);
            r.check("finite_k", format!("{t} {name}"), want, table.get(t, q));
        }
    }
}

fn parse_point(s: &str) -> Result<Vec3, Error> {
    if s.split_whitespace().count() != 3 {
        return Err(Error::Procedure(format!("bad golden point {s:?}")));
    }
    Ok(Vec3::parse(s))
}

fn golden_stabilizer_name(g: &CrystGroup, p: &Vec3, iso_only: bool) -> Result<String, Error> {
    let h = point_stabilizer(g, p).group;
    Ok(if iso_only {
        h.iso_type()?.to_string()
    } else {
        identify(&h)
            .map(String::from)
            .unwrap_or_else(|| format!("~{}", h.iso_type().map(|t| t.to_string()).unwrap_or_default()))
    })
}

fn check_cells(r: &mut GoldenReport, gold: &Goldens, d: &GroupData) -> Result<(), Error> {
    let g = &d.group;
    let empty = Vec::new();
    let rows = gold.cells.get(&g.label).unwrap_or(&empty);
    let cx: &CellComplex = &d.cells;
    r.check("cells", format!("{} count", g.label), rows.len(), cx.cells.len());
    let mut used = vec![false; cx.cells.len()];
    for row in rows {
        let (pt, name) = (&row[0], &row[1]);
        let dim = if row.get(2).map(String::as_str) == Some("edge") { 1 } else { 0 };
        let p = parse_point(pt)?;
        let key = format!("{} ({pt})", g.label);
        let iso_only = name.starts_with('~');
        let want = name.trim_start_matches('~');
        r.check("cells", format!("{key} stabilizer"), want, golden_stabilizer_name(g, &p, iso_only)?);
        let hit = cx
            .cells
            .iter()
            .enumerate()
            .position(|(i, c)| !used[i] && c.dim == dim && same_orbit(g, &c.point, &p).is_some());
        match hit {
            Some(i) => {
                used[i] = true;
                let c = &cx.cells[i];
                let have = if iso_only { c.iso.to_string() } else { c.stabilizer_name() };
                r.check("cells", format!("{key} computed"), want, have);
            }
            None => r.check("cells", format!("{key} orbit"), format!("dim {dim}"), "no computed cell in this orbit"),
        }
    }
    for (c, u) in cx.cells.iter().zip(&used) {
        if !u {
            r.check("cells", format!("{} ({})", g.label, c.point), "absent", c.stabilizer_name());
        }
    }
    Ok(())
}

fn check_hfin(r: &mut GoldenReport, gold: &Goldens, d: &GroupData) {
    let [a, b] = gold.hfin.get(&d.group.label).copied().unwrap_or([KExpr::ZERO; 2]);
    r.check("hfin", format!("{} K_-1", d.group.label), a, d.hfin.0);
    r.check("hfin", format!("{} K0~", d.group.label), b, d.hfin.1);
}

fn check_lines(r: &mut GoldenReport, gold: &Goldens, d: &GroupData) -> Result<(), Error> {
    let g = &d.group;
    let empty = Vec::new();
    let rows = gold.lines.get(&g.label).unwrap_or(&empty);
    let lines: &[LineData] = &d.lines;
    r.check("lines", format!("{} count", g.label), rows.len(), lines.len());
    let mut used = vec![false; lines.len()];
    for [text, name] in rows {
        let l = ParamLine::parse(g, text)?;
        let key = format!("{} {text}", g.label);
        let strict = strict_stabilizer(g, &l);
        let have = identify(&strict)
            .map(String::from)
            .unwrap_or_else(|| strict.iso_type().map(|t| t.to_string()).unwrap_or_default());
        r.check("lines", format!("{key} strict"), name, have);
        let hit = lines.iter().enumerate().position(|(i, c)| !used[i] && line_equivalence(g, &c.line, &l).is_some());
        match hit {
            Some(i) => used[i] = true,
            None => r.check("lines", format!("{key} orbit"), "computed line", "none equivalent"),
        }
    }
    for (c, u) in lines.iter().zip(&used) {
        if !u {
            r.check("lines", format!("{} {}", g.label, c.line), "absent", &c.strict_name);
        }
    }
    Ok(())
}

fn check_vc(r: &mut GoldenReport, gold: &Goldens, d: &GroupData) {
    let empty = BTreeMap::new();
    let want = gold.vc.get(&d.group.label).unwrap_or(&empty);
    let mut have: BTreeMap<String, usize> = BTreeMap::new();
    for l in &d.lines {
        *have.entry(l.vc.name().to_string()).or_default() += 1;
    }
    let keys: BTreeSet<&String> = want.keys().chain(have.keys()).collect();
    for k in keys {
        r.check(
            "vc",
            format!("{} {k}", d.group.label),
            want.get(k).copied().unwrap_or(0),
            have.get(k).copied().unwrap_or(0),
        );
    }
}

fn check_cokernels(r: &mut GoldenReport, gold: &Goldens) {
    for t in VcType::ALL {
        let [a, b] = gold.cokernels.get(&t).copied().unwrap_or([KExpr::ZERO; 2]);
        r.check("cokernels", format!("{t} n=-1"), KExpr::ZERO, cokernel(t, -1));
        r.check("cokernels", format!("{t} n=0"), a, cokernel(t, 0));
        r.check("cokernels", format!("{t} n=1"), b, cokernel(t, 1));
    }
}

fn check_ktheory(r: &mut GoldenReport, gold: &Goldens, d: &GroupData) {
    let [a, b, c] = gold.ktheory.get(&d.group.label).copied().unwrap_or([KExpr::ZERO; 3]);
    let l = &d.group.label;
    r.check("ktheory", format!("{l} K_-1"), a, d.k.k_minus1);
    r.check("ktheory", format!("{l} K0~"), b, d.k.k0_tilde);
    r.check("ktheory", format!("{l} Wh"), c, d.k.wh);
}

/// Diffs precomputed group data, and the finite-stabilizer table it was
/// computed with, against `gold`.
pub fn diff(gold: &Goldens, table: &FiniteKTable, data: &[GroupData]) -> Result<GoldenReport, Error> {
    let mut r = GoldenReport::default();
    for label in gold.ktheory.keys().chain(gold.hfin.keys()).chain(gold.cells.keys()).chain(gold.lines.keys()) {
        if !data.iter().any(|d| &d.group.label == label) {
            r.check("labels", label.clone(), "catalog group", "unknown label");
        }
    }
    check_catalog(&mut r, gold, data);
    check_finite_k(&mut r, gold, table);
    check_cokernels(&mut r, gold);
    for d in data {
        check_cells(&mut r, gold, d)?;
        check_hfin(&mut r, gold, d);
        check_lines(&mut r, gold, d)?;
        check_vc(&mut r, gold, d);
        check_ktheory(&mut r, gold, d);
    }
    r.mismatches.sort();
    Ok(r)
}

/// Recomputes every table from scratch and diffs it against the embedded goldens.
pub fn run_goldens() -> Result<GoldenReport, Error> {
    let table = FiniteKTable::default();
    let data = crate::report::compute_all(&table)?;
    diff(&Goldens::embedded()?, &table, &data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::group_data;
    use splitcryst::catalog::catalog;

    #[test]
    fn embedded_tables_parse() {
        let g = Goldens::embedded().unwrap();
        assert_eq!(g.catalog.iter().map(Vec::len).sum::<usize>(), 73);
        assert_eq!(g.cokernels.len(), 12);
        assert_eq!(g.finite_k[&(FinGroupType::Z6, -1)], KExpr::free(1));
        assert_eq!(g.ktheory["S4+x(-1)_1"][0], KExpr::free(2));
    }

    #[test]
    fn malformed_source_is_reported() {
        let mut src = [CATALOG, FINITE_K, CELLS, HFIN, LINES, VC, COKERNELS, KTHEORY];
        src[7] = r#"{"version": 1, "rows": {"C1+_1": ["0", "0", "Q/Z"]}}"#;
        assert!(matches!(Goldens::from_sources(&src), Err(Error::Procedure(_))));
    }

    #[test]
    fn single_group_diff() {
        let cat = catalog().unwrap();
        let table = FiniteKTable::default();
        let data = [group_data(&table, &cat, "D4+x(-1)_1").unwrap()];
        let report = diff(&Goldens::embedded().unwrap(), &table, &data).unwrap();
        // Labels of the other 72 groups are unknown to this partial run.
        assert!(
            report.mismatches.iter().all(|m| m.table == "labels" || m.table == "catalog"),
            "{:?}",
            report.mismatches
        );
        assert!(report.in_table("cells").next().is_none());
        assert!(report.checked > 0);
    }
}
