#pragma once

namespace gf {

/// Resource caps for the enumeration and search cores. Every cap is
/// user-overridable from the CLI (--cap-closure / --cap-arrows /
/// --cap-group-order, env GF_CAP_*).
struct Caps {
  long closure = 200000;  // max elements a closure enumeration may produce
  long arrows = 10000;    // max arrows accepted by the groupoid isomorphism search
  int group_order = 12;   // candidate-group order bound in the transformation-model search
  long table = 4096;      // max order materialized as an explicit multiplication table
};

}  // namespace gf
