#include "betti/betti_table.hpp"

#include <nlohmann/json.hpp>

#include "betti/errors.hpp"

namespace betti {

void BettiTable::add(int hdeg, const Monomial& mdeg, long count) {
  if (count == 0) return;
  if (count < 0) throw DomainError("BettiTable::add: negative count");
  entries_[hdeg][mdeg] += count;
}

long BettiTable::multigraded(int hdeg, const Monomial& mdeg) const {
  const auto row = entries_.find(hdeg);
  if (row == entries_.end()) return 0;
  const auto cell = row->second.find(mdeg);
  return cell == row->second.end() ? 0 : cell->second;
}

long BettiTable::graded(int hdeg, std::uint64_t degree) const {
  const auto row = entries_.find(hdeg);
  if (row == entries_.end()) return 0;
  long sum = 0;
  for (const auto& [mdeg, count] : row->second)
    if (mdeg.total_degree() == degree) sum += count;
  return sum;
}

long BettiTable::total(int hdeg) const {
  const auto row = entries_.find(hdeg);
  if (row == entries_.end()) return 0;
  long sum = 0;
  for (const auto& [mdeg, count] : row->second) sum += count;
  return sum;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> out(static_cast<std::size_t>(pd()) + 1, 0);
  for (const auto& [hdeg, row] : entries_)
    for (const auto& [mdeg, count] : row)
      out[static_cast<std::size_t>(hdeg)] += count;
  return out;
}

int BettiTable::pd() const {
  int best = 0;
  for (const auto& [hdeg, row] : entries_)
    if (!row.empty() && hdeg > best) best = hdeg;
  return best;
}

long BettiTable::sum() const {
  long sum = 0;
  for (const auto& [hdeg, row] : entries_)
    for (const auto& [mdeg, count] : row) sum += count;
  return sum;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json graded_obj = nlohmann::json::object();
  nlohmann::json multigraded_obj = nlohmann::json::object();
  for (const auto& [hdeg, row] : entries_) {
    std::map<std::uint64_t, long> by_degree;
    nlohmann::json cells = nlohmann::json::object();
    for (const auto& [mdeg, count] : row) {
      by_degree[mdeg.total_degree()] += count;
      cells[to_string(mdeg)] = count;
    }
    for (const auto& [degree, count] : by_degree)
      graded_obj[std::to_string(hdeg) + "," + std::to_string(degree)] = count;
    multigraded_obj[std::to_string(hdeg)] = std::move(cells);
  }
  return nlohmann::json{{"total", totals()},
                        {"graded", std::move(graded_obj)},
                        {"multigraded", std::move(multigraded_obj)},
                        {"pd", pd()}};
}

}  // namespace betti
