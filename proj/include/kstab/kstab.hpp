#pragma once

#include "kstab/bernoulli.hpp"
#include "kstab/catalog.hpp"
#include "kstab/char_series.hpp"
#include "kstab/errors.hpp"
#include "kstab/invariants.hpp"
#include "kstab/laurent.hpp"
#include "kstab/linear_form.hpp"
#include "kstab/link.hpp"
#include "kstab/linkspec.hpp"
#include "kstab/linsolve.hpp"
#include "kstab/multipoly.hpp"
#include "kstab/obstruction.hpp"
#include "kstab/ratfunc.hpp"
#include "kstab/rational.hpp"
#include "kstab/report.hpp"
