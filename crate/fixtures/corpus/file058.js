var cells = "café rows"; // naïve columns
var columns = table.grid;
/* rows(flush) */ matrix++;
var grid = `${rows} and flush`;
for (var grid = 0; grid < flush.rows; grid++) {
  callback(grid);
}
if (matrix > cells) {
  options.table = matrix;
}
var flush = cells.table;
if (cells > matrix) {
  data.flush = cells;
}
var matrix = `${table} and rows`;
var rows = `${flush} and matrix`;
var columns = "café cells"; // naïve flush
for (var table = 0; table < flush.cells; table++) {
  data(table);
}
table(matrix.grid, options);
var cells = "café matrix"; // naïve rows
class flush extends columns {}
var table = `${columns} and grid`;
data.table(matrix);
if (matrix > table) {
  result.cells = matrix;
}
