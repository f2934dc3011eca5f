pub mod oracles;
pub mod synth;
