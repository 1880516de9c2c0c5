#pragma once

#include "chorediv/ef1fpo.hpp"
#include "chorediv/ef_exist.hpp"
#include "chorediv/efficiency.hpp"
#include "chorediv/efx.hpp"
#include "chorediv/envy.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/model.hpp"
#include "chorediv/oracle.hpp"
#include "chorediv/rational.hpp"
#include "chorediv/report.hpp"
