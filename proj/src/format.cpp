#include "bitten/format.hpp"

#include <algorithm>

namespace bitten {

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

std::string hasse_dot(const QuotientPoset& q,
                      const std::function<std::string(std::size_t)>& label) {
  std::string out = "digraph quotient {\n  rankdir=BT;\n";
  for (std::size_t c = 0; c < q.class_count(); ++c)
    out += "  n" + std::to_string(c) + " [label=\"" + label(c) + "\"];\n";
  auto edges = q.hasse_edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges)
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

ExampleTable example_table(const QuotientPoset& q) {
  const Universe& u = q.universe();
  const Granulation& g = q.granulation();

  // Published row order: singletons, pairs, the four triples in their
  // printed order, S, empty set.
  const std::vector<std::vector<std::string>> row_sets = {
      {"x1"}, {"x2"}, {"x3"}, {"x4"},
      {"x1", "x2"}, {"x1", "x3"}, {"x1", "x4"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"},
      {"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x2", "x3", "x4"}, {"x1", "x3", "x4"},
      {"x1", "x2", "x3", "x4"}, {}};

  ExampleTable t;
  t.class_label.assign(q.class_count(), "");
  t.class_label[q.bottom()] = "B" + std::to_string(q.class_count() - 1);
  t.class_label[q.top()] = "B" + std::to_string(q.class_count());
  std::size_t next = 1;

  t.rows.push_back({"row", "class", "X", "lower", "upper", "negative", "bitten"});
  for (std::size_t r = 0; r < row_sets.size(); ++r) {
    Mask x = u.mask_of(row_sets[r]);
    std::size_t cls = q.class_of(x);
    if (t.class_label[cls].empty()) t.class_label[cls] = "B" + std::to_string(next++);
    ApproximationProfile p = profile(g, Subset(u, x));
    t.rows.push_back({"A" + std::to_string(r + 1), t.class_label[cls], u.render(x),
                      p.lower.render(), p.upper.render(), p.negative.render(),
                      p.bitten_upper.render()});
  }
  return t;
}

}  // namespace bitten
