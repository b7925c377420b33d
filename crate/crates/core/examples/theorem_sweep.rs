//! A small seeded sweep over all claims, printed as a summary plus CSV.

use deephole::verify::{run_sweep, Claim, SweepConfig};

fn main() -> deephole::Result<()> {
    let config = SweepConfig {
        claims: Claim::ALL.to_vec(),
        q_list: vec![5, 7],
        words_per_config: 5,
        liwan_trials: 10,
        seed: 42,
        ..SweepConfig::default()
    };
    let report = run_sweep(&config)?;
    for claim in Claim::ALL {
        let rows: Vec<_> = report.rows_for(claim).collect();
        let slowest = rows.iter().map(|r| r.elapsed).max().unwrap_or_default();
        println!("{claim:<8} {:>4} rows, slowest {slowest:?}", rows.len());
    }
    println!("{:?}", report.summary);
    for row in report.refuted_rows() {
        println!("refuted: {row:?}");
    }
    let csv = report.to_csv();
    for line in csv.lines().take(6) {
        println!("{line}");
    }
    Ok(())
}
