#pragma once

#include <string_view>

namespace tautint {

enum class ClassKind { chern = 0, segre = 1, ch = 2 };

std::string_view kind_symbol(ClassKind k);

}  // namespace tautint
