#include "stanley/ring.hpp"

#include <set>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
  return names;
}

void validate(int n, const std::vector<std::string>& names) {
  if (n < 0) throw InvalidInputError("ring must have a nonnegative variable count");
  if (n > kMaxVars)
    throw BoundError("ring exceeds the supported variable bound of " +
                     std::to_string(kMaxVars));
  if (static_cast<int>(names.size()) != n)
    throw InvalidInputError("ring name list does not match variable count");
  std::set<std::string> seen(names.begin(), names.end());
  if (static_cast<int>(seen.size()) != n)
    throw InvalidInputError("ring variable names must be pairwise distinct");
}

}  // namespace

Ring::Ring(int var_count) : Ring(var_count, default_names(var_count)) {}

Ring::Ring(int var_count, std::vector<std::string> names) {
  validate(var_count, names);
  data_ = std::make_shared<const Data>(Data{var_count, std::move(names)});
}

const std::string& Ring::var_name(int j) const {
  if (j < 0 || j >= data_->n)
    throw InvalidInputError("variable index out of range");
  return data_->names[j];
}

int Ring::var_index(const std::string& name) const {
  for (int j = 0; j < data_->n; ++j)
    if (data_->names[j] == name) return j;
  return -1;
}

bool Ring::operator==(const Ring& o) const {
  if (data_ == o.data_) return true;
  return data_->n == o.data_->n && data_->names == o.data_->names;
}

Ring Ring::extended() const {
  std::vector<std::string> names = data_->names;
  int k = data_->n + 1;
  std::string fresh = "x" + std::to_string(k);
  while (var_index(fresh) >= 0) fresh = "x" + std::to_string(++k);
  names.push_back(fresh);
  return Ring(data_->n + 1, std::move(names));
}

Ring Ring::restricted(VarSet keep) const {
  std::vector<std::string> names;
  for (int j : keep.members()) names.push_back(var_name(j));
  return Ring(keep.count(), std::move(names));
}

void require_same_ring(const Ring& a, const Ring& b, const char* context) {
  if (a != b)
    throw AmbientMismatchError(std::string(context) +
                               ": operands live in different rings");
}

}  // namespace stanley
