#include "ison/cofinite.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ison/errors.hpp"

namespace ison {

CofiniteSet::CofiniteSet(std::vector<int> finite_part, int tail_start)
    : finite_part_(std::move(finite_part)), tail_start_(tail_start) {
  if (tail_start_ < 1) {
    throw InvalidParameters("tail_start must be >= 1, got " +
                            std::to_string(tail_start_));
  }
  for (int m : finite_part_) {
    if (m < 1) {
      throw InvalidParameters("set member must be >= 1, got " +
                              std::to_string(m));
    }
  }
  std::sort(finite_part_.begin(), finite_part_.end());
  finite_part_.erase(std::unique(finite_part_.begin(), finite_part_.end()),
                     finite_part_.end());
  // drop members the tail already covers, then pull the tail left over
  // any members touching it
  while (!finite_part_.empty() && finite_part_.back() >= tail_start_) {
    finite_part_.pop_back();
  }
  while (!finite_part_.empty() && finite_part_.back() == tail_start_ - 1) {
    finite_part_.pop_back();
    --tail_start_;
  }
}

bool CofiniteSet::member(int n) const {
  if (n >= tail_start_) return true;
  return std::binary_search(finite_part_.begin(), finite_part_.end(), n);
}

int CofiniteSet::min_member() const {
  return finite_part_.empty() ? tail_start_ : finite_part_.front();
}

bool CofiniteSet::subset_of(const CofiniteSet& other) const {
  if (tail_start_ < other.tail_start_) return false;
  return std::all_of(finite_part_.begin(), finite_part_.end(),
                     [&](int m) { return other.member(m); });
}

CofiniteSet CofiniteSet::intersect(const CofiniteSet& other) const {
  int t = std::max(tail_start_, other.tail_start_);
  std::vector<int> fp;
  for (int x = 1; x < t; ++x) {
    if (member(x) && other.member(x)) fp.push_back(x);
  }
  return CofiniteSet(std::move(fp), t);
}

CofiniteSet CofiniteSet::translate(int c) const {
  if (min_member() + c < 1) {
    throw UnderflowError("translate by " + std::to_string(c) +
                         " maps " + std::to_string(min_member()) +
                         " below 1");
  }
  std::vector<int> fp(finite_part_);
  for (int& m : fp) m += c;
  return CofiniteSet(std::move(fp), tail_start_ + c);
}

std::vector<int> CofiniteSet::complement_list() const {
  std::vector<int> out;
  for (int x = 1; x < tail_start_; ++x) {
    if (!member(x)) out.push_back(x);
  }
  return out;
}

std::string CofiniteSet::str() const {
  std::ostringstream os;
  if (!finite_part_.empty()) {
    os << '{';
    for (std::size_t k = 0; k < finite_part_.size(); ++k) {
      if (k > 0) os << ',';
      os << finite_part_[k];
    }
    os << "}+";
  }
  os << '[' << tail_start_ << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CofiniteSet& s) {
  return os << s.str();
}

}  // namespace ison
