#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bitten/quotient.hpp"

namespace bitten {

// Left-aligned plain-text table; column widths from the widest cell.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

// Hasse diagram of the quotient as DOT, nodes labeled by the supplied
// function, edges bottom to top, deterministic order.
std::string hasse_dot(const QuotientPoset& q,
                      const std::function<std::string(std::size_t)>& label);

// The sixteen-row golden table of the four-element example, together with
// its class labels; row order and labels follow the published layout
// (bottom class gets the second-to-last label, top class the last).
struct ExampleTable {
  std::vector<std::vector<std::string>> rows;  // header + 16 rows
  std::vector<std::string> class_label;        // per quotient class id
};

ExampleTable example_table(const QuotientPoset& q);

}  // namespace bitten
