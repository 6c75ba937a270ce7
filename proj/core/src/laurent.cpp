#include "vertexloc/laurent.hpp"

#include <stdexcept>

namespace vertexloc {

LaurentWindow::LaurentWindow(std::vector<std::string> vars, std::vector<std::pair<int, int>> bounds)
    : vars_(std::move(vars)), bounds_(std::move(bounds)) {
  if (vars_.size() != bounds_.size()) throw std::invalid_argument("one bound per variable");
}

bool LaurentWindow::in_bounds(const Exps& e) const {
  if (e.size() != bounds_.size()) return false;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] < bounds_[k].first || e[k] > bounds_[k].second) return false;
  return true;
}

void LaurentWindow::add(const Exps& e, const Scalar& c) {
  if (!in_bounds(e)) throw std::out_of_range("exponent outside the window");
  if (c.is_zero()) return;
  auto it = coeffs_.find(e);
  if (it == coeffs_.end()) {
    coeffs_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar LaurentWindow::get(const Exps& e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Scalar(VarSet::T) : it->second;
}

bool LaurentWindow::operator==(const LaurentWindow& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  auto b = o.coeffs_.begin();
  for (const auto& [e, c] : coeffs_) {
    if (e != b->first || c != b->second) return false;
    ++b;
  }
  return true;
}

std::string LaurentWindow::str() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : coeffs_) {
    if (!s.empty()) s += " + ";
    s += "[" + c.str() + "]";
    for (std::size_t k = 0; k < e.size(); ++k) s += "*" + vars_[k] + "^" + std::to_string(e[k]);
  }
  return s;
}

}  // namespace vertexloc
