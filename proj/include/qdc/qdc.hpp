// qdc.hpp — convenience umbrella for the whole library.

#pragma once

#include "qdc/bell.hpp"
#include "qdc/core.hpp"
#include "qdc/decodability.hpp"
#include "qdc/protocol.hpp"
#include "qdc/weyl.hpp"
