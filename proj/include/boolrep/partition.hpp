// Set partitions in normalized restricted-growth form: classOf[i] is the
// class of element i, classes are numbered by first occurrence, so equal
// partitions compare equal as vectors.

#ifndef BOOLREP_PARTITION_HPP_
#define BOOLREP_PARTITION_HPP_

#include <functional>
#include <vector>

namespace boolrep {

using Partition = std::vector<int>;

Partition normalize_partition(Partition p);
Partition trivial_partition(std::size_t n);    // all singletons
Partition universal_partition(std::size_t n);  // one class

int n_classes(const Partition& p);

// Members of each class, ascending.
std::vector<std::vector<int>> partition_classes(const Partition& p);

// Every pair related by p is related by q.
bool partition_refines(const Partition& p, const Partition& q);

// Visits every partition of {0..n-1} in restricted-growth order.
void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& visit);

}  // namespace boolrep

#endif  // BOOLREP_PARTITION_HPP_
