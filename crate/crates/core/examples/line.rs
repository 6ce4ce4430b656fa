//! Times window-sum generation of one line: `cargo run --release --example line -- 3 5000`.

use std::time::Instant;

use knomial::{make_params, Row};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<i64>().expect("integer argument"));
    let k = args.next().unwrap_or(3);
    let n = args.next().unwrap_or(5000);
    let params = make_params(k).expect("valid order");
    let start = Instant::now();
    let line = Row::generate(&params, n as usize);
    let digits = line.coefficients()[line.len() / 2].to_string().len();
    println!(
        "k={k} line {n}: {} entries, center has {digits} digits, {:?}",
        line.len(),
        start.elapsed()
    );
}
