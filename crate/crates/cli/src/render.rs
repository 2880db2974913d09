//! Text and CSV renderings of a report. JSON comes straight from serde.

use std::fmt::Write;

use crate::report::{Report, Results};

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match &report.results {
        Results::Index(r) => {
            let _ = writeln!(
                out,
                "graph: {} vertices, {} edges, cycle rank {}, {} negative edge(s)",
                r.vertices, r.edges, r.cycle_rank, r.negative_edges
            );
            if let Some(i) = &r.cycles {
                let _ = writeln!(
                    out,
                    "index (cycles): n+ = {}, n0 = {}, n- = {}",
                    i.n_plus, i.n_zero, i.n_minus
                );
            }
            if let Some(i) = &r.direct {
                let _ = writeln!(
                    out,
                    "index (direct): n+ = {}, n0 = {}, n- = {}",
                    i.n_plus, i.n_zero, i.n_minus
                );
            }
            let _ = writeln!(
                out,
                "sign-topology bounds: {} <= n+ <= {}",
                r.lower_bound, r.upper_bound
            );
            if r.degenerate_kernel {
                let _ = writeln!(out, "warning: kernel dimension exceeds one (degenerate weights)");
            }
        }
        Results::Detred(r) => {
            let _ = writeln!(out, "graph: {} vertices, {} edges", r.vertices, r.edges);
            let _ = writeln!(out, "det_red(L) / N = {:.*e}", 12, r.lhs);
            let _ = writeln!(out, "det(Z) * prod(gamma) = {:.*e}", 12, r.rhs);
            let _ = writeln!(out, "|lhs / rhs| = {:.*}", 12, r.ratio);
            let _ = writeln!(out, "sign factor = {:+}", r.sign_factor);
        }
        Results::RingTable(r) => {
            let _ = writeln!(
                out,
                "{:>5} {:>18} {:>18} {:>18} {:>8}",
                "n", "zeta_star", "n*zeta/2pi", "omega_wrap", "long"
            );
            for row in &r.rows {
                let _ = writeln!(
                    out,
                    "{:>5} {:>18.12} {:>18.12} {:>18.12} {:>8}",
                    row.n, row.zeta_star, row.normalized_link, row.omega_wrap, row.is_long
                );
            }
        }
        Results::RingScan(r) => {
            let _ = writeln!(out, "ring n = {}", r.n);
            let _ = writeln!(
                out,
                "{:>18} {:>18} {:>18} {:>18}",
                "zeta", "indicator", "omega_wrap", "cos_wrap"
            );
            for row in &r.rows {
                match row.indicator {
                    Some(h) => {
                        let _ = writeln!(
                            out,
                            "{:>18.12} {:>18.12} {:>18.12} {:>18.12}",
                            row.zeta, h, row.omega_wrap, row.cos_wrap
                        );
                    }
                    None => {
                        let _ = writeln!(
                            out,
                            "{:>18.12} {:>18} {:>18.12} {:>18.12}",
                            row.zeta, "pole", row.omega_wrap, row.cos_wrap
                        );
                    }
                }
            }
        }
        Results::Classify(r) => {
            let _ = writeln!(
                out,
                "unstable dimension: {} (zero modes: {})",
                r.unstable_dim, r.zero_modes
            );
            let _ = writeln!(out, "jacobian edge weights:");
            for e in &r.edges {
                let marker = if e.long { "  [long]" } else { "" };
                let _ = writeln!(out, "  {} {} {:.12}{}", e.tail, e.head, e.weight, marker);
            }
            if r.long_links.is_empty() {
                let _ = writeln!(out, "no long links");
            } else {
                let links: Vec<String> = r
                    .long_links
                    .iter()
                    .map(|(u, v)| format!("({u}, {v})"))
                    .collect();
                let _ = writeln!(out, "long links: {}", links.join(" "));
            }
        }
        Results::Cover(r) => {
            let _ = writeln!(
                out,
                "# fundamental domain: {} vertices, {} edges; |V(T)| - |V(G)| = {} = C",
                r.vertices_t,
                r.edges.len(),
                r.cycle_rank
            );
            for e in &r.edges {
                let _ = writeln!(out, "{} {} {}", e.tail, e.head, e.weight);
            }
            let phi: Vec<String> = r
                .phi
                .iter()
                .enumerate()
                .map(|(a, v)| format!("{a}->{v}"))
                .collect();
            let _ = writeln!(out, "# phi: {}", phi.join(" "));
        }
    }
    out
}

pub fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    match &report.results {
        Results::Index(r) => {
            let _ = writeln!(out, "key,value");
            let _ = writeln!(out, "vertices,{}", r.vertices);
            let _ = writeln!(out, "edges,{}", r.edges);
            let _ = writeln!(out, "cycle_rank,{}", r.cycle_rank);
            let _ = writeln!(out, "negative_edges,{}", r.negative_edges);
            let _ = writeln!(out, "lower_bound,{}", r.lower_bound);
            let _ = writeln!(out, "upper_bound,{}", r.upper_bound);
            if let Some(i) = &r.cycles {
                let _ = writeln!(out, "cycles_n_plus,{}", i.n_plus);
                let _ = writeln!(out, "cycles_n_zero,{}", i.n_zero);
                let _ = writeln!(out, "cycles_n_minus,{}", i.n_minus);
            }
            if let Some(i) = &r.direct {
                let _ = writeln!(out, "direct_n_plus,{}", i.n_plus);
                let _ = writeln!(out, "direct_n_zero,{}", i.n_zero);
                let _ = writeln!(out, "direct_n_minus,{}", i.n_minus);
            }
            let _ = writeln!(out, "degenerate_kernel,{}", r.degenerate_kernel);
        }
        Results::Detred(r) => {
            let _ = writeln!(out, "key,value");
            let _ = writeln!(out, "vertices,{}", r.vertices);
            let _ = writeln!(out, "edges,{}", r.edges);
            let _ = writeln!(out, "lhs,{}", r.lhs);
            let _ = writeln!(out, "rhs,{}", r.rhs);
            let _ = writeln!(out, "ratio,{}", r.ratio);
            let _ = writeln!(out, "sign_factor,{}", r.sign_factor);
        }
        Results::RingTable(r) => {
            let _ = writeln!(out, "n,zeta_star,normalized_link,omega_wrap,is_long");
            for row in &r.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.n, row.zeta_star, row.normalized_link, row.omega_wrap, row.is_long
                );
            }
        }
        Results::RingScan(r) => {
            let _ = writeln!(out, "zeta,indicator,omega_wrap,cos_wrap,pole");
            for row in &r.rows {
                let (h, pole) = match row.indicator {
                    Some(h) => (h.to_string(), 0),
                    None => (String::new(), 1),
                };
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    row.zeta, h, row.omega_wrap, row.cos_wrap, pole
                );
            }
        }
        Results::Classify(r) => {
            let _ = writeln!(out, "tail,head,weight,long");
            for e in &r.edges {
                let _ = writeln!(out, "{},{},{},{}", e.tail, e.head, e.weight, e.long);
            }
        }
        Results::Cover(r) => {
            let _ = writeln!(out, "tail,head,weight,phi_tail,phi_head");
            for e in &r.edges {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.tail, e.head, e.weight, r.phi[e.tail], r.phi[e.head]
                );
            }
        }
    }
    out
}
