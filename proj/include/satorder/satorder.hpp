#pragma once

#include "satorder/bouquet.hpp"
#include "satorder/enumeration.hpp"
#include "satorder/error.hpp"
#include "satorder/generators.hpp"
#include "satorder/interval.hpp"
#include "satorder/io.hpp"
#include "satorder/poset.hpp"
#include "satorder/representation.hpp"
#include "satorder/saturation.hpp"
#include "satorder/verdict.hpp"
#include "satorder/verify.hpp"
#include "satorder/witness.hpp"
