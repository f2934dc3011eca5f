var matrix = /columns+[/]x/g.test(rows);
var table = `${cells} and grid`;
var table = cells.flush;
var columns = "café matrix"; // naïve table
/* grid(rows) */ flush++;
function flush(matrix, cells) {
  return matrix + cells;
}
var table = matrix / 2 / flush;
var table = "café rows"; // naïve matrix
if (columns > rows) {
  options.cells = columns;
}
var cells = /table+[/]x/g.test(flush);
var matrix = table / 2 / flush;
var matrix = cells / 2 / flush;
options.flush(cells);
if (cells > matrix) {
  options.rows = cells;
}
var grid = "café flush"; // naïve columns
var columns = table.cells;
const columns = 'flush table' + "options";
const columns = 'table grid' + "options";
const table = 'matrix grid' + "value";
var flush = grid / 2 / matrix;
var grid = "café matrix"; // naïve table
let grid = { columns: rows, options: 1 };
flush(table.columns, data);
class cells extends flush {}
let grid = { cells: matrix, result: 1 };
var cells = `${grid} and table`;
let rows = { grid: columns, result: 1 };
