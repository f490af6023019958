//! Plain-text rendering for `--format table`. The text is assembled from
//! the same ordered data as the JSON documents, so it is just as
//! deterministic.

use std::fmt::Write;

use grasstilt_core::tilting::{
    Example24Tables, ExtVanishingTables, GenerationTables, KapranovTables, Prop3SweepTables,
};
use grasstilt_core::{AggregateReport, CohomologyTable, Verdict, VerificationReport};

use crate::docs::{BottDoc, BoxDoc, DimDoc, LrDoc, SummandsDoc};

fn verdict_text(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Failed => "FAILED",
        Verdict::OutOfScope => "out-of-scope",
    }
}

fn table_lines(out: &mut String, table: &CohomologyTable, indent: &str) {
    if table.is_zero() {
        let _ = writeln!(out, "{indent}zero in every degree");
        return;
    }
    for d in table.nonzero_degrees() {
        let weights: Vec<String> = table
            .weights_at(d)
            .into_iter()
            .flatten()
            .map(|(w, c)| format!("{c} x {:?}", w.entries()))
            .collect();
        let _ = writeln!(
            out,
            "{indent}H^{d}: dim {}  [{}]",
            table.dimension(d),
            weights.join(", ")
        );
    }
}

pub fn box_table(doc: &BoxDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "partitions in the {} x {} box ({} total):",
        doc.rows, doc.cols, doc.count
    );
    for p in &doc.partitions {
        let _ = writeln!(out, "  {p}");
    }
    out
}

pub fn lr_table(doc: &LrDoc) -> String {
    let mut out = String::new();
    let bound = doc
        .rank_bound
        .map(|n| format!(" (rank bound {n})"))
        .unwrap_or_default();
    let _ = writeln!(out, "L_{} (x) L_{}{bound}:", doc.a, doc.b);
    for (p, c) in doc.product.terms_desc() {
        let _ = writeln!(out, "  {c} x {p}");
    }
    if doc.product.is_zero() {
        let _ = writeln!(out, "  0");
    }
    out
}

pub fn dim_table(doc: &DimDoc) -> String {
    format!(
        "dim L_{} of a rank-{} space = {}\n",
        doc.partition, doc.rank, doc.dimension
    )
}

pub fn bott_table(doc: &BottDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "cohomology on {} of weight {:?}:",
        doc.context, doc.weight
    );
    table_lines(&mut out, &doc.table, "  ");
    out
}

pub fn summands_table(doc: &SummandsDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} summands on {}:", doc.count, doc.context);
    for (s, r) in doc.sequences.iter().zip(&doc.ranks) {
        let _ = writeln!(out, "  {s}  rank {r}");
    }
    let _ = writeln!(out, "total rank {}", doc.total_rank);
    out
}

pub fn ext_table(report: &VerificationReport<ExtVanishingTables>) -> String {
    let mut out = String::new();
    let t = &report.tables;
    let _ = writeln!(
        out,
        "ext-vanishing on {}: {} ({} ordered pairs, degrees 1..={})",
        report.context,
        verdict_text(report.verdict),
        t.pairs_checked,
        t.max_degree_checked
    );
    let _ = writeln!(out, "summands (rows = source, columns = target):");
    for (i, s) in t.summands.iter().enumerate() {
        let _ = writeln!(out, "  [{i}] {s}  rank {}", t.ranks[i]);
    }
    let _ = writeln!(out, "hom matrix:");
    for row in &t.hom_matrix {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(out, "  [{}]", cells.join(", "));
    }
    for w in &report.witnesses {
        let _ = writeln!(out, "witness: {w:?}");
    }
    out
}

pub fn prop3_table(report: &VerificationReport<Prop3SweepTables>) -> String {
    let mut out = String::new();
    let t = &report.tables;
    let _ = writeln!(
        out,
        "prop3-sweep on {}: {} ({} sequences x {} gammas in box {}, {} checks)",
        report.context,
        verdict_text(report.verdict),
        t.sequence_count,
        t.gamma_count,
        t.gamma_box,
        t.checks
    );
    for w in &report.witnesses {
        let _ = writeln!(out, "witness: {w:?}");
    }
    out
}

pub fn generation_table(report: &VerificationReport<GenerationTables>) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "generation-order on {}: {}",
        report.context,
        verdict_text(report.verdict)
    );
    for e in &report.tables.entries {
        let _ = writeln!(
            out,
            "  alpha {} <- sequence {}: coefficient {}, support {}{}",
            e.alpha,
            e.sequence,
            e.coefficient,
            e.support_size,
            if e.ok { "" } else { "  [VIOLATION]" }
        );
    }
    out
}

pub fn kapranov_table(report: &VerificationReport<KapranovTables>) -> String {
    let mut out = String::new();
    let t = &report.tables;
    let _ = writeln!(
        out,
        "kapranov-support on {}: {} (support {} of {} box partitions)",
        report.context,
        verdict_text(report.verdict),
        t.support_count,
        t.box_count
    );
    let _ = writeln!(out, "decomposition:");
    for (p, c) in t.decomposition.terms_desc() {
        let _ = writeln!(out, "  {c} x {p}");
    }
    let _ = writeln!(
        out,
        "rank: {} from summands, {} from the decomposition{}",
        t.total_rank_from_summands,
        t.decomposition_rank,
        if t.rank_consistent {
            ""
        } else {
            "  [MISMATCH]"
        }
    );
    if !t.missing.is_empty() {
        let _ = writeln!(out, "missing from support: {:?}", t.missing);
    }
    if let Some(note) = &t.note {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn example_table(report: &VerificationReport<Example24Tables>) -> String {
    let mut out = String::new();
    let t = &report.tables;
    let _ = writeln!(out, "example-grass-2-4: {}", verdict_text(report.verdict));
    let _ = writeln!(out, "(Wedge^2 Q)^dual (x) S_2 Q:");
    table_lines(&mut out, &t.twisted_symmetric_square, "  ");
    let _ = writeln!(out, "Q^dual (x) Q:");
    table_lines(&mut out, &t.endomorphism_table, "  ");
    let _ = writeln!(
        out,
        "ranks: wedge {} + sym {} = tensor {}{}",
        t.rank_exterior_square,
        t.rank_symmetric_square,
        t.rank_tensor_square,
        if t.rank_identity_holds {
            ""
        } else {
            "  [MISMATCH]"
        }
    );
    out
}

pub fn aggregate_table(report: &AggregateReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "aggregate report for {} (library {}, characteristic {})",
        report.context, report.library_version, report.characteristic
    );
    let c = &report.checks;
    let _ = writeln!(
        out,
        "  ext-vanishing:    {}",
        verdict_text(c.ext_vanishing.verdict)
    );
    let _ = writeln!(
        out,
        "  prop3-sweep:      {}",
        verdict_text(c.prop3_sweep.verdict)
    );
    let _ = writeln!(
        out,
        "  generation-order: {}",
        verdict_text(c.generation_order.verdict)
    );
    let _ = writeln!(
        out,
        "  kapranov-support: {}",
        verdict_text(c.kapranov_support.verdict)
    );
    if let Some(example) = &c.example_grass_2_4 {
        let _ = writeln!(
            out,
            "  example-grass-2-4: {}",
            verdict_text(example.verdict)
        );
    }
    let _ = writeln!(out, "{}", report.disclaimer);
    out
}
