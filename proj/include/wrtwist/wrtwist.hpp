#pragma once

// Everything except the command front-end (wrtwist/cli.hpp), which also
// needs nlohmann/json.

#include "wrtwist/errors.hpp"
#include "wrtwist/rational.hpp"
#include "wrtwist/field.hpp"
#include "wrtwist/ideal.hpp"
#include "wrtwist/twist.hpp"
#include "wrtwist/enumeration.hpp"
#include "wrtwist/similarity.hpp"
#include "wrtwist/oracle.hpp"
