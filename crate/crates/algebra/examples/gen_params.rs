//! Regenerates the pinned parameter sets. Usage:
//!   cargo run --release -p vdas-algebra --example gen_params

use vdas_algebra::{gen_group_params, params_to_text};

fn main() {
    for (q_bits, p_bits, seed, label) in [
        (16, 64, "vdas-toy-64-v1", "toy-64"),
        (160, 512, "vdas-ss-512-v1", "ss-512"),
    ] {
        let params = gen_group_params(q_bits, p_bits, seed.as_bytes(), label)
            .expect("parameter search failed");
        println!("{}", params_to_text(&params));
    }
}
