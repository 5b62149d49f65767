export {
  assertSharedGrid,
  CsvError,
  PROFILE_HEADER,
  readProfiles,
  readTable1,
  readValues,
  TABLE1_HEADER,
  VALUE_HEADER,
  type ProfileRow,
  type Table1Row,
  type ValueRow,
} from "./csv.js";
export {
  QUANTITY_LABELS,
  render,
  renderCompareOverlay,
  renderProfile2d,
  renderSurface3d,
  type FigureKind,
  type FigureSpec,
  type QuantityName,
} from "./figures.js";
export {
  colorAt,
  COLORS,
  linePlot,
  paddedExtent,
  surfacePlot,
  tickLabel,
  ticks,
  type LinePlotSpec,
  type Series,
  type SurfaceSpec,
} from "./svg.js";
export { main, specFromArgs } from "./cli.js";
