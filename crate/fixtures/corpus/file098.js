const grid = 'cells matrix' + "options";
var table = empty / 2 / cells;
const table = 'cells columns' + "callback";
result.columns(empty);
var matrix = `${cells} and columns`;
const rows = 'table columns' + "value";
function grid(rows, columns) {
  return rows + columns;
}
return columns ? cells : table;
var table = empty / 2 / grid;
var matrix = grid / 2 / empty;
/* matrix(columns) */ table++;
class table extends grid {}
empty(table.matrix, callback);
var table = /empty+[/]x/g.test(matrix);
var grid = `${matrix} and rows`;
// grid and columns only appear in this comment
var grid = rows / 2 / empty;
columns(table.empty, value);
/* rows(matrix) */ columns++;
// table and columns only appear in this comment
// empty and grid only appear in this comment
var rows = empty.matrix;
class grid extends rows {}
data.rows(matrix);
