#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stanley/varset.hpp"

namespace stanley {

// Ambient polynomial ring: number of variables and their print names.
// Copies are cheap; equality is structural (same count, same names).
class Ring {
public:
  explicit Ring(int var_count);
  Ring(int var_count, std::vector<std::string> names);

  int var_count() const { return data_->n; }
  const std::string& var_name(int j) const;
  const std::vector<std::string>& var_names() const { return data_->names; }
  int var_index(const std::string& name) const;  // -1 when absent
  VarSet all_vars() const { return VarSet::first_n(data_->n); }

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

  Ring extended() const;               // one fresh variable appended
  Ring restricted(VarSet keep) const;  // subring on the kept variables

private:
  struct Data {
    int n;
    std::vector<std::string> names;
  };
  std::shared_ptr<const Data> data_;
};

void require_same_ring(const Ring& a, const Ring& b, const char* context);

}  // namespace stanley
