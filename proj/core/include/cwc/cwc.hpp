#pragma once

// Umbrella header: binary linear constant weight codes via support partitions.

#include "cwc/autgroup.hpp"
#include "cwc/codeword.hpp"
#include "cwc/construct.hpp"
#include "cwc/equivalence.hpp"
#include "cwc/errors.hpp"
#include "cwc/linear_code.hpp"
#include "cwc/permutation.hpp"
#include "cwc/supports.hpp"
