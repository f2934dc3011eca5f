var columns = grid.table;
function cells(flush, matrix) {
  return flush + matrix;
}
var matrix = flush / 2 / table;
var matrix = `${grid} and flush`;
var table = "café rows"; // naïve matrix
let flush = { columns: matrix, options: 1 };
var grid = flush.table;
var rows = `${columns} and cells`;
var table = matrix / 2 / cells;
if (columns > grid) {
  callback.rows = columns;
}
var columns = cells.table;
for (var flush = 0; flush < grid.cells; flush++) {
  value(flush);
}
var rows = `${grid} and table`;
if (table > rows) {
  callback.cells = table;
}
/* columns(flush) */ grid++;
data.table(cells);
function cells(flush, grid) {
  return flush + grid;
}
