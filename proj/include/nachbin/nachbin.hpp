#pragma once

#include "approximation.hpp"
#include "carrier.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "fnalg.hpp"
#include "order.hpp"
#include "proximity.hpp"
#include "random.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "sbal.hpp"
#include "sbal_plus.hpp"
#include "spectrum.hpp"
