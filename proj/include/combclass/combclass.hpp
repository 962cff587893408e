#pragma once

#include "combclass/bigint.hpp"
#include "combclass/class_expr.hpp"
#include "combclass/egf.hpp"
#include "combclass/lyndon.hpp"
#include "combclass/partitions.hpp"
#include "combclass/seqcyc.hpp"
#include "combclass/serialize.hpp"
#include "combclass/trees.hpp"
#include "combclass/verify.hpp"
