#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llv/graded_algebra.hpp"
#include "llv/quadratic.hpp"

namespace llv {

/// Contents of a ring-description file.
///
/// Fields: top_degree, dims, basis (labels per degree), products (records {i, j, k, coeff}
/// on global basis indices), integration (top-degree coefficients), optional bigrading
/// ([p, q] per basis element), optional quadratic_form (dense matrix on degree 2), optional
/// sigma and sigma_bar (full coefficient vectors). Coefficients are strings "num/den" or
/// "a/b+c/d i", or JSON integers; floats are rejected.
template <typename F>
struct RingDescription {
  GradedAlgebra<F> ring;
  std::optional<std::vector<std::pair<int, int>>> bigrading;
  std::optional<QuadraticForm> quadratic_form;
  std::optional<Vec<F>> sigma;
  std::optional<Vec<F>> sigma_bar;
};

/// Parses a description. Throws ParseError for malformed text or fields, DimensionError
/// when counts disagree, ValidationError when a product lands in the wrong degree.
/// With F = Rational, coefficients with a nonzero imaginary part are a ParseError.
template <typename F>
RingDescription<F> parse_ring(const std::string& text);

template <typename F>
RingDescription<F> load_ring(const std::string& path);

/// Every nonzero structure constant is written, in (i, j) order.
template <typename F>
std::string dump_ring(const RingDescription<F>& d);

template <typename F>
void save_ring(const RingDescription<F>& d, const std::string& path);

template <typename F>
RingDescription<F> describe(const GradedAlgebra<F>& r, const std::optional<QuadraticForm>& q = std::nullopt);

template <typename F>
RingDescription<F> describe(const BigradedAlgebra<F>& b, const std::optional<QuadraticForm>& q = std::nullopt);

/// Bigraded view of a description with a bigrading. Without explicit sigma / sigma_bar the
/// unique basis element of type (2,0) / (0,2) is used. Throws ValidationError when neither
/// is available or the top degree is not divisible by 4.
template <typename F>
BigradedAlgebra<F> bigraded(const RingDescription<F>& d);

}  // namespace llv
