#pragma once

#include "ncgb/freealg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ncgb {

/// The seven word shapes spanning the matrix envelope (indices 1-based):
///   unit            1
///   letter          e[a,b]
///   col_row         e[a,1] e[1,b]
///   row_col         e[1,a] e[b,1], (a,b) != (1,1)
///   row_pivot_col   e[1,a] e[1,1] e[b,1], b != 1
///   pivot_sq_row    e[1,1]^2 e[1,b]
///   pivot_fourth    e[1,1]^4
enum class Shape { unit, letter, col_row, row_col, row_pivot_col, pivot_sq_row, pivot_fourth };

struct ShapedWord {
  Shape shape;
  int a = 0;
  int b = 0;
};

/// Shape of `w` over the n x n matrix alphabet, or nullopt if `w` is not one
/// of the 4n^2+1 basis words.
std::optional<ShapedWord> classify(const Word& w, int n);

Word shaped_word(const ShapedWord& s, int n);

/// The 4n^2+1 basis words listed shape by shape, sorted ascending deglex.
std::vector<Word> explicit_basis(int n);

class UncoveredCase : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed-form product of two basis words, written as a combination of basis
/// words. Evaluated from delta expressions only; shares nothing with the
/// rewriting engine.
NcPoly oracle_product(int n, const Word& u, const Word& v);

}  // namespace ncgb
