#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rw/index.hpp"

namespace rw {

/// A color inside one finite palette.  Atomic palettes use index 0 = red,
/// 1 = blue, 2 = green; product palettes hold one index per component.
/// Colors from different palettes must not be compared.
class Color {
public:
  Color(std::string palette, std::vector<int> indices)
      : palette_(std::move(palette)), indices_(std::move(indices)) {}
  static Color atom(std::string palette, int index) {
    return Color(std::move(palette), {index});
  }

  const std::string& palette() const { return palette_; }
  const std::vector<int>& indices() const { return indices_; }

  bool operator==(const Color& other) const {
    if (palette_ != other.palette_)
      throw PaletteMismatch("comparing colors from palettes " + palette_ +
                            " and " + other.palette_);
    return indices_ == other.indices_;
  }
  bool operator!=(const Color& other) const { return !(*this == other); }

  std::string name() const;

private:
  std::string palette_;
  std::vector<int> indices_;
};

inline constexpr int kRed = 0;
inline constexpr int kBlue = 1;
inline constexpr int kGreen = 2;

/// A deterministic total coloring of finite words, described by kind and
/// parameters (serializable to a small JSON object).
class ColoringSpec {
public:
  enum class Kind {
    recurrence,        // red = factor seen but fewer than threshold times
    nonfactor_nf,      // non-factors per C_NF, factors by the inner coloring
    firstocc_split,    // red = a split v1 v2 with A(v1)=A(u), B(v2)=B(u)
    zimin_cz,          // the Zimin coloring, C_NF on non-factors of Z
    period_doubling_cw,// C_Z(W(u)) on factors of D
    squarefree3,       // green on irreducibles, red iff lambda/rho sets agree
    product            // cartesian product of component palettes
  };

  static ColoringSpec recurrence(std::size_t window, std::size_t threshold);
  static ColoringSpec nonfactor_nf(ColoringSpec inner);
  static ColoringSpec firstocc_split();
  static ColoringSpec zimin_cz();
  static ColoringSpec period_doubling_cw();
  static ColoringSpec squarefree3(std::size_t search_window);
  static ColoringSpec product(std::vector<ColoringSpec> parts);

  Kind kind() const { return kind_; }
  std::size_t window() const { return window_; }
  std::size_t threshold() const { return threshold_; }
  std::size_t search_window() const { return window_; }
  const std::vector<ColoringSpec>& children() const { return children_; }

  std::size_t palette_size() const;
  std::string palette_id() const;
  /// Smallest index window the evaluation requires.
  std::size_t min_window() const;

  std::string display() const;
  nlohmann::json to_json() const;
  static ColoringSpec from_json(const nlohmann::json& j);
  static ColoringSpec parse(const std::string& text);  // name or JSON

private:
  explicit ColoringSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::size_t window_ = 0;
  std::size_t threshold_ = 0;
  std::vector<ColoringSpec> children_;
};

/// Evaluates the coloring on u against the given index.  Total on its
/// declared domain and pure; raises WindowInsufficient when a verdict would
/// require looking beyond the window.
Color color(const ColoringSpec& spec, const FactorIndex& idx, const Word& u);

using ColorFn = std::function<Color(const Word&)>;

/// Binds spec and index; the index must outlive the function.
ColorFn color_fn(const ColoringSpec& spec, const FactorIndex& idx);

}  // namespace rw
