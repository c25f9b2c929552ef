#![allow(dead_code)]

pub mod fox;
pub mod oracles;
